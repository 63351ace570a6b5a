//! Pre-Lie and Lie algebras given by structure constants, their
//! representations, multiplication operators and the cohomology coboundary.
//!
//! Conventions: `e_i · e_j = Σ_k c[i][j][k] e_k` for pre-Lie products and
//! `[e_i, e_j] = Σ_k f[i][j][k] e_k` for Lie brackets, indices 0-based in
//! code and 1-based in reports and file formats. A cochain of degree `k`
//! is a multilinear map on `Λ^{k-1}g ⊗ g` — antisymmetric in its first
//! `k-1` slots, with no symmetry tying in the last one.

use crate::exactla::{
    basis_vec, format_rat, rat, sort_with_sign, vec_add, vec_axpy, vec_is_zero, vec_scale, vec_sub,
    wedge_enumerate, wedge_position, zero_vec, Matrix, Rat,
};
use crate::report::{failure_at, Error, Report};

/// Structure-constant cube `t[i][j][k]`.
pub type Cube = Vec<Vec<Vec<Rat>>>;

pub fn zero_cube(n: usize) -> Cube {
    vec![vec![zero_vec(n); n]; n]
}

fn check_cube_shape(c: &Cube) -> Result<usize, Error> {
    let n = c.len();
    if c.iter()
        .any(|p| p.len() != n || p.iter().any(|row| row.len() != n))
    {
        return Err(Error::input("structure cube must be n x n x n".to_string()));
    }
    Ok(n)
}

pub(crate) fn fmt_vec(v: &[Rat]) -> String {
    use num_traits::Zero;
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("{}*e{}", format_rat(c), k + 1))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// Pre-Lie algebra on a based n-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieAlgebra {
    dim: usize,
    c: Cube,
    basis_names: Option<Vec<String>>,
}

/// Lie algebra on a based n-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    f: Cube,
}

/// Pass iff the associator `(x,y,z) = (x·y)·z − x·(y·z)` is symmetric in
/// `(x,y)` on every basis triple.
pub fn verify_pre_lie(c: &Cube) -> Result<Report, Error> {
    let n = check_cube_shape(c)?;
    let mut report = Report::passing("pre-Lie associator symmetry");
    let prod_vec = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        let mut out = zero_vec(n);
        for (i, xi) in x.iter().enumerate() {
            if xi == &rat(0) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let cij = xi * yj;
                if cij != rat(0) {
                    vec_axpy(&mut out, &cij, &c[i][j]);
                }
            }
        }
        out
    };
    'outer: for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                let em = basis_vec(n, m);
                let lhs = vec_sub(
                    &prod_vec(&c[i][j], &em),
                    &prod_vec(&basis_vec(n, i), &c[j][m]),
                );
                let rhs = vec_sub(
                    &prod_vec(&c[j][i], &em),
                    &prod_vec(&basis_vec(n, j), &c[i][m]),
                );
                if lhs != rhs {
                    report.record(failure_at(
                        "associator symmetry (x,y,z) = (y,x,z)",
                        &[i, j, m],
                        fmt_vec(&lhs),
                        fmt_vec(&rhs),
                    ));
                    break 'outer;
                }
            }
        }
    }
    Ok(report)
}

/// Pass iff skew-symmetry and the Jacobi identity hold on all basis triples.
pub fn verify_lie(f: &Cube) -> Result<Report, Error> {
    let n = check_cube_shape(f)?;
    let mut report = Report::passing("Lie bracket axioms");
    'skew: for i in 0..n {
        for j in 0..n {
            let lhs = f[i][j].clone();
            let rhs = vec_scale(&rat(-1), &f[j][i]);
            if lhs != rhs {
                report.record(failure_at(
                    "skew-symmetry [x,y] = -[y,x]",
                    &[i, j],
                    fmt_vec(&lhs),
                    fmt_vec(&rhs),
                ));
                break 'skew;
            }
        }
    }
    let bracket_vec = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        let mut out = zero_vec(n);
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                let cij = xi * yj;
                if cij != rat(0) {
                    vec_axpy(&mut out, &cij, &f[i][j]);
                }
            }
        }
        out
    };
    'jacobi: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut acc = bracket_vec(&f[i][j], &basis_vec(n, k));
                acc = vec_add(&acc, &bracket_vec(&f[j][k], &basis_vec(n, i)));
                acc = vec_add(&acc, &bracket_vec(&f[k][i], &basis_vec(n, j)));
                if !vec_is_zero(&acc) {
                    report.record(failure_at(
                        "Jacobi identity",
                        &[i, j, k],
                        fmt_vec(&acc),
                        "0".to_string(),
                    ));
                    break 'jacobi;
                }
            }
        }
    }
    Ok(report)
}

impl PreLieAlgebra {
    /// Build from a structure cube, verifying the pre-Lie identity.
    pub fn new(c: Cube) -> Result<Self, Error> {
        let report = verify_pre_lie(&c)?;
        if !report.pass {
            return Err(Error::precondition(report));
        }
        Ok(PreLieAlgebra {
            dim: c.len(),
            c,
            basis_names: None,
        })
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Self {
        self.basis_names = Some(names);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cube(&self) -> &Cube {
        &self.c
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    /// `e_i · e_j` as a coordinate vector.
    pub fn product_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        self.c[i][j].clone()
    }

    pub fn product(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi == &rat(0) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let cij = xi * yj;
                if cij != rat(0) {
                    vec_axpy(&mut out, &cij, &self.c[i][j]);
                }
            }
        }
        out
    }

    /// Sub-adjacent Lie algebra: `[x,y] = x·y − y·x`.
    pub fn sub_adjacent(&self) -> LieAlgebra {
        let n = self.dim;
        let mut f = zero_cube(n);
        for i in 0..n {
            for j in 0..n {
                f[i][j] = vec_sub(&self.c[i][j], &self.c[j][i]);
            }
        }
        LieAlgebra { dim: n, f }
    }

    /// Left and right multiplication operators `L_x y = x·y`, `R_x y = y·x`.
    pub fn mult_operators(&self, x: &[Rat]) -> Result<(Matrix, Matrix), Error> {
        if x.len() != self.dim {
            return Err(Error::input(format!(
                "vector length {} does not match dimension {}",
                x.len(),
                self.dim
            )));
        }
        let n = self.dim;
        let mut l = Matrix::zeros(n, n);
        let mut r = Matrix::zeros(n, n);
        for k in 0..n {
            for j in 0..n {
                let mut lv = rat(0);
                let mut rv = rat(0);
                for (i, xi) in x.iter().enumerate() {
                    lv += xi * &self.c[i][j][k];
                    rv += xi * &self.c[j][i][k];
                }
                l[(k, j)] = lv;
                r[(k, j)] = rv;
            }
        }
        Ok((l, r))
    }

    /// Duals of the multiplication operators on `g*`:
    /// `L*_x = −L_xᵀ`, `R*_x = −R_xᵀ`, `ad*_x = L*_x − R*_x`.
    pub fn dual_operators(&self, x: &[Rat]) -> Result<(Matrix, Matrix, Matrix), Error> {
        let (l, r) = self.mult_operators(x)?;
        let lstar = -&l.transpose();
        let rstar = -&r.transpose();
        let adstar = &lstar - &rstar;
        Ok((lstar, rstar, adstar))
    }

    pub fn left_mult(&self, i: usize) -> Matrix {
        self.mult_operators(&basis_vec(self.dim, i)).unwrap().0
    }

    pub fn right_mult(&self, i: usize) -> Matrix {
        self.mult_operators(&basis_vec(self.dim, i)).unwrap().1
    }

    /// The trivial representation on an m-dimensional space (ρ = μ = 0).
    pub fn trivial_rep(&self, m: usize) -> PreLieRepresentation {
        let z = Matrix::zeros(m, m);
        PreLieRepresentation {
            space_dim: m,
            rho: vec![z.clone(); self.dim],
            mu: vec![z; self.dim],
        }
    }

    /// The regular representation (ρ = L, μ = R) on the algebra itself.
    pub fn regular_rep(&self) -> PreLieRepresentation {
        let rho = (0..self.dim).map(|i| self.left_mult(i)).collect();
        let mu = (0..self.dim).map(|i| self.right_mult(i)).collect();
        PreLieRepresentation {
            space_dim: self.dim,
            rho,
            mu,
        }
    }

    /// The dual of the regular representation on `g*`: (ρ = ad*, μ = −R*).
    pub fn dual_rep(&self) -> PreLieRepresentation {
        let mut rho = Vec::with_capacity(self.dim);
        let mut mu = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let (_lstar, rstar, adstar) = self.dual_operators(&basis_vec(self.dim, i)).unwrap();
            rho.push(adstar);
            mu.push(-&rstar);
        }
        PreLieRepresentation {
            space_dim: self.dim,
            rho,
            mu,
        }
    }

    /// `L*` as a Lie representation of the sub-adjacent algebra on `g*`.
    pub fn left_mult_dual_rep(&self) -> LieRepresentation {
        let rho = (0..self.dim)
            .map(|i| -&self.left_mult(i).transpose())
            .collect();
        LieRepresentation {
            space_dim: self.dim,
            rho,
        }
    }
}

impl LieAlgebra {
    pub fn new(f: Cube) -> Result<Self, Error> {
        let report = verify_lie(&f)?;
        if !report.pass {
            return Err(Error::precondition(report));
        }
        Ok(LieAlgebra { dim: f.len(), f })
    }

    /// Abelian Lie algebra of the given dimension.
    pub fn abelian(n: usize) -> Self {
        LieAlgebra {
            dim: n,
            f: zero_cube(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cube(&self) -> &Cube {
        &self.f
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        self.f[i][j].clone()
    }

    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi == &rat(0) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let cij = xi * yj;
                if cij != rat(0) {
                    vec_axpy(&mut out, &cij, &self.f[i][j]);
                }
            }
        }
        out
    }

    /// Adjoint representation ρ = ad.
    pub fn adjoint_rep(&self) -> LieRepresentation {
        let n = self.dim;
        let rho = (0..n)
            .map(|i| {
                let mut m = Matrix::zeros(n, n);
                for j in 0..n {
                    for k in 0..n {
                        m[(k, j)] = self.f[i][j][k].clone();
                    }
                }
                m
            })
            .collect();
        LieRepresentation { space_dim: n, rho }
    }

    pub fn verify(&self) -> Report {
        verify_lie(&self.f).expect("shape checked at construction")
    }
}

/// Representation (V; ρ, μ) of a pre-Lie algebra.
#[derive(Clone, Debug)]
pub struct PreLieRepresentation {
    pub space_dim: usize,
    /// ρ(e_i) as a matrix on V.
    pub rho: Vec<Matrix>,
    /// μ(e_i) as a matrix on V.
    pub mu: Vec<Matrix>,
}

/// Representation (V; ρ) of a Lie algebra.
#[derive(Clone, Debug)]
pub struct LieRepresentation {
    pub space_dim: usize,
    pub rho: Vec<Matrix>,
}

impl LieRepresentation {
    pub fn zero(alg_dim: usize, space_dim: usize) -> Self {
        LieRepresentation {
            space_dim,
            rho: vec![Matrix::zeros(space_dim, space_dim); alg_dim],
        }
    }

    /// Apply ρ(x) for a general x.
    pub fn apply(&self, x: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let mut out = zero_vec(self.space_dim);
        for (i, xi) in x.iter().enumerate() {
            if xi != &rat(0) {
                vec_axpy(&mut out, xi, &self.rho[i].mul_vec(v));
            }
        }
        out
    }

    pub fn matrix_of(&self, x: &[Rat]) -> Matrix {
        let mut m = Matrix::zeros(self.space_dim, self.space_dim);
        for (i, xi) in x.iter().enumerate() {
            if xi != &rat(0) {
                m = &m + &self.rho[i].scale(xi);
            }
        }
        m
    }
}

/// Pass iff ρ([e_i,e_j]) = ρ(e_i)ρ(e_j) − ρ(e_j)ρ(e_i) on all basis pairs.
pub fn verify_lie_representation(
    lie: &LieAlgebra,
    rep: &LieRepresentation,
) -> Result<Report, Error> {
    if rep.rho.len() != lie.dim() {
        return Err(Error::input(
            "representation must assign a matrix to every basis element",
        ));
    }
    if rep
        .rho
        .iter()
        .any(|m| m.rows() != rep.space_dim || m.cols() != rep.space_dim)
    {
        return Err(Error::input(
            "representation matrices must be square of the space dimension",
        ));
    }
    let mut report = Report::passing("Lie algebra representation");
    'outer: for i in 0..lie.dim() {
        for j in 0..lie.dim() {
            let lhs = rep.matrix_of(&lie.bracket_basis(i, j));
            let rhs = &(&rep.rho[i] * &rep.rho[j]) - &(&rep.rho[j] * &rep.rho[i]);
            if lhs != rhs {
                report.record(failure_at(
                    "rho([x,y]) = [rho(x), rho(y)]",
                    &[i, j],
                    format!("{lhs:?}"),
                    format!("{rhs:?}"),
                ));
                break 'outer;
            }
        }
    }
    Ok(report)
}

/// Pass iff ρ is a Lie representation of the sub-adjacent algebra and the
/// compatibility `ρ(x)μ(y) − μ(y)ρ(x) = μ(x·y) − μ(y)μ(x)` holds on all
/// basis pairs.
pub fn verify_representation(
    a: &PreLieAlgebra,
    rep: &PreLieRepresentation,
) -> Result<Report, Error> {
    if rep.rho.len() != a.dim() || rep.mu.len() != a.dim() {
        return Err(Error::input(
            "representation must assign matrices to every basis element",
        ));
    }
    let m = rep.space_dim;
    if rep
        .rho
        .iter()
        .chain(rep.mu.iter())
        .any(|mat| mat.rows() != m || mat.cols() != m)
    {
        return Err(Error::input("representation matrices must be m x m"));
    }
    let mut report = Report::passing("pre-Lie algebra representation");
    let lie = a.sub_adjacent();
    let lie_rep = LieRepresentation {
        space_dim: m,
        rho: rep.rho.clone(),
    };
    report.absorb("rho", verify_lie_representation(&lie, &lie_rep)?);

    'outer: for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = &(&rep.rho[i] * &rep.mu[j]) - &(&rep.mu[j] * &rep.rho[i]);
            let mut mu_xy = Matrix::zeros(m, m);
            for (k, ck) in a.product_basis(i, j).iter().enumerate() {
                if ck != &rat(0) {
                    mu_xy = &mu_xy + &rep.mu[k].scale(ck);
                }
            }
            let rhs = &mu_xy - &(&rep.mu[j] * &rep.mu[i]);
            if lhs != rhs {
                report.record(failure_at(
                    "rho(x)mu(y) - mu(y)rho(x) = mu(x.y) - mu(y)mu(x)",
                    &[i, j],
                    format!("{lhs:?}"),
                    format!("{rhs:?}"),
                ));
                break 'outer;
            }
        }
    }
    Ok(report)
}

/// Cochain of degree `k ≥ 1` with values in an m-dimensional space:
/// a multilinear map on `Λ^{k-1}g ⊗ g`, stored as a coefficient table over
/// (strictly increasing wedge index, last basis index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieCochain {
    pub arity: usize,
    pub alg_dim: usize,
    pub val_dim: usize,
    /// Indexed by `wedge_position * alg_dim + last`.
    coeffs: Vec<Vec<Rat>>,
}

impl PreLieCochain {
    pub fn zero(arity: usize, alg_dim: usize, val_dim: usize) -> Self {
        assert!(arity >= 1);
        let wedges = crate::exactla::binomial(alg_dim, arity - 1);
        PreLieCochain {
            arity,
            alg_dim,
            val_dim,
            coeffs: vec![zero_vec(val_dim); wedges * alg_dim],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|v| vec_is_zero(v))
    }

    fn slot(&self, wedge: &[usize], last: usize) -> usize {
        wedge_position(self.alg_dim, wedge) * self.alg_dim + last
    }

    pub fn get(&self, wedge: &[usize], last: usize) -> &Vec<Rat> {
        &self.coeffs[self.slot(wedge, last)]
    }

    pub fn set(&mut self, wedge: &[usize], last: usize, value: Vec<Rat>) {
        let s = self.slot(wedge, last);
        self.coeffs[s] = value;
    }

    /// Evaluate on basis arguments; the wedge part may be unsorted (the sign
    /// of the sorting permutation is applied) and repeats give zero.
    pub fn eval_basis(&self, wedge: &[usize], last: usize) -> Vec<Rat> {
        debug_assert_eq!(wedge.len(), self.arity - 1);
        if self.coeffs.is_empty() {
            return zero_vec(self.val_dim);
        }
        let mut sorted = wedge.to_vec();
        match sort_with_sign(&mut sorted) {
            None => zero_vec(self.val_dim),
            Some(sign) => {
                let v = self.get(&sorted, last);
                if sign > 0 {
                    v.clone()
                } else {
                    vec_scale(&rat(-1), v)
                }
            }
        }
    }

    /// Evaluate with a general vector in the first wedge slot.
    pub fn eval_first_general(&self, first: &[Rat], wedge_rest: &[usize], last: usize) -> Vec<Rat> {
        let mut out = zero_vec(self.val_dim);
        for (s, c) in first.iter().enumerate() {
            if c == &rat(0) {
                continue;
            }
            let mut args = Vec::with_capacity(wedge_rest.len() + 1);
            args.push(s);
            args.extend_from_slice(wedge_rest);
            vec_axpy(&mut out, c, &self.eval_basis(&args, last));
        }
        out
    }

    /// Evaluate with a general vector in the last slot.
    pub fn eval_last_general(&self, wedge: &[usize], last: &[Rat]) -> Vec<Rat> {
        let mut out = zero_vec(self.val_dim);
        for (b, c) in last.iter().enumerate() {
            if c == &rat(0) {
                continue;
            }
            vec_axpy(&mut out, c, &self.eval_basis(wedge, b));
        }
        out
    }
}

/// Coboundary of the pre-Lie cohomology complex: a degree-k cochain with
/// values in (V; ρ, μ) goes to the degree-(k+1) cochain
///
/// ```text
/// dφ(x_1,…,x_{k+1}) =  Σ_{i≤k} (−1)^{i+1} ρ(x_i) φ(…ˆx_i…, x_{k+1})
///                    + Σ_{i≤k} (−1)^{i+1} μ(x_{k+1}) φ(…ˆx_i…, x_i)
///                    − Σ_{i≤k} (−1)^{i+1} φ(…ˆx_i…, x_i · x_{k+1})
///                    + Σ_{i<j≤k} (−1)^{i+j} φ([x_i,x_j], …ˆx_iˆx_j…, x_{k+1}).
/// ```
pub fn coboundary(
    a: &PreLieAlgebra,
    rep: &PreLieRepresentation,
    phi: &PreLieCochain,
) -> Result<PreLieCochain, Error> {
    if phi.alg_dim != a.dim() || phi.val_dim != rep.space_dim {
        return Err(Error::input(
            "cochain dimensions must match algebra and representation",
        ));
    }
    let n = a.dim();
    let k = phi.arity;
    let mut out = PreLieCochain::zero(k + 1, n, rep.space_dim);
    if phi.coeffs.is_empty() {
        return Ok(out); // arity overflow: the zero cochain of the empty space
    }
    let lie = a.sub_adjacent();
    for w in wedge_enumerate(n, k) {
        let xs = w.indices();
        for b in 0..n {
            let mut val = zero_vec(rep.space_dim);
            for (pos, &xi) in xs.iter().enumerate() {
                let sign = if pos % 2 == 0 { rat(1) } else { rat(-1) };
                let rest: Vec<usize> = xs
                    .iter()
                    .enumerate()
                    .filter(|(q, _)| *q != pos)
                    .map(|(_, &v)| v)
                    .collect();
                // ρ(x_i) φ(…, x_{k+1})
                let t1 = rep.rho[xi].mul_vec(&phi.eval_basis(&rest, b));
                vec_axpy(&mut val, &sign, &t1);
                // μ(x_{k+1}) φ(…, x_i)
                let t2 = rep.mu[b].mul_vec(&phi.eval_basis(&rest, xi));
                vec_axpy(&mut val, &sign, &t2);
                // −φ(…, x_i · x_{k+1})
                let t3 = phi.eval_last_general(&rest, &a.product_basis(xi, b));
                vec_axpy(&mut val, &-sign, &t3);
            }
            for pi in 0..xs.len() {
                for pj in pi + 1..xs.len() {
                    // 1-based (−1)^{i+j} with i = pi+1, j = pj+1
                    let sign = if (pi + pj) % 2 == 0 { rat(1) } else { rat(-1) };
                    let rest: Vec<usize> = xs
                        .iter()
                        .enumerate()
                        .filter(|(q, _)| *q != pi && *q != pj)
                        .map(|(_, &v)| v)
                        .collect();
                    let br = lie.bracket_basis(xs[pi], xs[pj]);
                    let t4 = phi.eval_first_general(&br, &rest, b);
                    vec_axpy(&mut val, &sign, &t4);
                }
            }
            out.set(xs, b, val);
        }
    }
    Ok(out)
}
