//! The S-equation and s-matrices on pre-Lie algebras.
//!
//! A symmetric 2-tensor `r` is an s-matrix when the tensor
//! `[r,r] = −r_12·r_13 + r_12·r_23 + [r_13, r_23] ∈ Λ²g⊗g` vanishes.
//! Equivalently `r♯: g* → g` is a relative Rota-Baxter operator for the
//! sub-adjacent algebra acting on `g*` through `L*`; both routes are
//! computed on every verification and must agree.
//!
//! Sign conventions are pinned by the tensor formula above together with the
//! transported bracket `⟦φ,ψ⟧ = Υ⟦Ψφ,Ψψ⟧`. Two derived identities then hold
//! with these signs and are asserted throughout:
//!
//! - componentwise residual: `[r,r](α,β,·) = [r♯α, r♯β] − r♯([α,β]_r)`;
//! - normalization: `⟦r,r⟧ = −2·[r,r]` for every symmetric `r`.

use crate::exactla::{
    basis_vec, format_rat, rat, sort_with_sign, vec_axpy, vec_is_zero, vec_scale, wedge_enumerate,
    wedge_position, zero_vec, Matrix, Poly, PolyCoeff, Rat,
};
use crate::prelie::{zero_cube, Cube, LieAlgebra, PreLieAlgebra, PreLieCochain};
use crate::report::{failure_at, Error, Report};
use crate::rotabaxter::{graded_bracket, is_relative_rb, MapCochain, RBContext};
use num_traits::Zero;

/// Symmetric element of `Sym²(g)` as an n×n coefficient table:
/// `r = Σ coeff[i][j] e_i⊗e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTensor2 {
    dim: usize,
    coeff: Vec<Vec<Rat>>,
}

impl SymTensor2 {
    pub fn new(coeff: Vec<Vec<Rat>>) -> Result<Self, Error> {
        let n = coeff.len();
        if coeff.iter().any(|row| row.len() != n) {
            return Err(Error::input("coefficient table must be square"));
        }
        for i in 0..n {
            for j in i + 1..n {
                if coeff[i][j] != coeff[j][i] {
                    return Err(Error::input(format!(
                        "table is not symmetric at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(SymTensor2 { dim: n, coeff })
    }

    pub fn zero(dim: usize) -> Self {
        SymTensor2 {
            dim,
            coeff: vec![zero_vec(dim); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn table(&self) -> &Vec<Vec<Rat>> {
        &self.coeff
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.coeff[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.iter().all(|row| vec_is_zero(row))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let coeff = self
            .coeff
            .iter()
            .zip(&other.coeff)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        SymTensor2 {
            dim: self.dim,
            coeff,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        SymTensor2 {
            dim: self.dim,
            coeff: self.coeff.iter().map(|row| vec_scale(c, row)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat(-1))
    }

    /// Matrix of `r♯: g* → g`, `⟨r♯α, β⟩ = r(α,β)`; in the dual/primal bases
    /// this is the coefficient table itself.
    pub fn sharp(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                // column i = coordinates of r♯(e_i*)
                m[(j, i)] = self.coeff[i][j].clone();
            }
        }
        m
    }

    pub fn is_invertible(&self) -> bool {
        self.sharp().rank() == self.dim
    }

    /// View as a degree-2 element of `Λ¹g⊗g = g⊗g`.
    pub fn to_cochain(&self) -> TensorCochain {
        let mut t = TensorCochain::zero(2, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(&[i], j, self.coeff[i][j].clone());
            }
        }
        t
    }

    /// The pre-Lie product `α ∗_r β = L*_{r♯α} β` on `g*` as a structure
    /// cube (not gated on the S-equation).
    pub fn star_cube(a: &PreLieAlgebra, r: &SymTensor2) -> Cube {
        let n = a.dim();
        let mut cube = zero_cube(n);
        let sharp = r.sharp();
        for i in 0..n {
            let (lstar, _, _) = a.dual_operators(&sharp.column(i)).unwrap();
            for j in 0..n {
                cube[i][j] = lstar.mul_vec(&basis_vec(n, j));
            }
        }
        cube
    }
}

/// Element of `C^k = Λ^{k-1}g ⊗ g` for `k ≥ 1`; degree-1 elements are plain
/// vectors of g. Stored over (strictly increasing wedge index, last index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorCochain {
    pub arity: usize,
    pub dim: usize,
    /// Indexed by `wedge_position * dim + last`.
    coeffs: Vec<Rat>,
}

impl TensorCochain {
    pub fn zero(arity: usize, dim: usize) -> Self {
        assert!(arity >= 1);
        let wedges = crate::exactla::binomial(dim, arity - 1);
        TensorCochain {
            arity,
            dim,
            coeffs: vec![rat(0); wedges * dim],
        }
    }

    /// Degree-1 element from a vector of g.
    pub fn from_vector(v: Vec<Rat>) -> Self {
        let dim = v.len();
        TensorCochain {
            arity: 1,
            dim,
            coeffs: v,
        }
    }

    pub fn to_vector(&self) -> Vec<Rat> {
        assert_eq!(self.arity, 1);
        self.coeffs.clone()
    }

    /// Degree-2 elements are tables on g⊗g; errors when not symmetric.
    pub fn to_sym(&self) -> Result<SymTensor2, Error> {
        if self.arity != 2 {
            return Err(Error::input("only degree-2 elements convert to Sym²"));
        }
        let n = self.dim;
        let table: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(&[i], j).clone()).collect())
            .collect();
        SymTensor2::new(table)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn slot(&self, wedge: &[usize], last: usize) -> usize {
        wedge_position(self.dim, wedge) * self.dim + last
    }

    pub fn get(&self, wedge: &[usize], last: usize) -> &Rat {
        &self.coeffs[self.slot(wedge, last)]
    }

    pub fn set(&mut self, wedge: &[usize], last: usize, value: Rat) {
        let s = self.slot(wedge, last);
        self.coeffs[s] = value;
    }

    pub fn add_into(&mut self, wedge: &[usize], last: usize, value: &Rat) {
        let s = self.slot(wedge, last);
        self.coeffs[s] += value;
    }

    /// Flat coefficient slice in (wedge position, last index) order — the
    /// coordinates in the unit basis of `Λ^{k-1}g⊗g`.
    pub fn flat_coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Rebuild from flat coordinates.
    pub fn from_flat(arity: usize, dim: usize, coeffs: Vec<Rat>) -> Self {
        let expected = crate::exactla::binomial(dim, arity - 1) * dim;
        assert_eq!(coeffs.len(), expected);
        TensorCochain { arity, dim, coeffs }
    }

    /// Evaluate on dual basis vectors `(e_{a_1}*, …, e_{a_k}*)`; the first
    /// `k−1` arguments may come unsorted.
    pub fn eval_dual_basis(&self, args: &[usize]) -> Rat {
        debug_assert_eq!(args.len(), self.arity);
        if self.coeffs.is_empty() {
            return rat(0);
        }
        let (wedge, last) = args.split_at(self.arity - 1);
        let mut sorted = wedge.to_vec();
        match sort_with_sign(&mut sorted) {
            None => rat(0),
            Some(sign) => {
                let v = self.get(&sorted, last[0]).clone();
                if sign > 0 {
                    v
                } else {
                    -v
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.arity, self.dim), (other.arity, other.dim));
        TensorCochain {
            arity: self.arity,
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TensorCochain {
            arity: self.arity,
            dim: self.dim,
            coeffs: vec_scale(c, &self.coeffs),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat(-1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Scalar-valued cochain view (for the pre-Lie coboundary on the dual).
    pub fn to_scalar_cochain(&self) -> PreLieCochain {
        let mut out = PreLieCochain::zero(self.arity, self.dim, 1);
        for w in wedge_enumerate(self.dim, self.arity - 1) {
            for last in 0..self.dim {
                out.set(w.indices(), last, vec![self.get(w.indices(), last).clone()]);
            }
        }
        out
    }

    pub fn from_scalar_cochain(c: &PreLieCochain) -> Self {
        assert_eq!(c.val_dim, 1);
        let mut out = TensorCochain::zero(c.arity, c.alg_dim);
        for w in wedge_enumerate(c.alg_dim, c.arity - 1) {
            for last in 0..c.alg_dim {
                out.set(w.indices(), last, c.get(w.indices(), last)[0].clone());
            }
        }
        out
    }

    /// Render like `-(e1∧e2)⊗e2 + 3*(e1∧e3)⊗e1`.
    pub fn render(&self) -> String {
        let mut terms = Vec::new();
        for w in wedge_enumerate(self.dim, self.arity - 1) {
            for last in 0..self.dim {
                let c = self.get(w.indices(), last);
                if c.is_zero() {
                    continue;
                }
                let wedge_part = if w.indices().is_empty() {
                    String::new()
                } else {
                    format!(
                        "({})⊗",
                        w.indices()
                            .iter()
                            .map(|i| format!("e{}", i + 1))
                            .collect::<Vec<_>>()
                            .join("∧")
                    )
                };
                let body = format!("{wedge_part}e{}", last + 1);
                let term = if c == &rat(1) {
                    body
                } else if c == &rat(-1) {
                    format!("-{body}")
                } else {
                    format!("{}*{body}", format_rat(c))
                };
                terms.push(term);
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            let mut out = terms[0].clone();
            for t in &terms[1..] {
                if let Some(stripped) = t.strip_prefix('-') {
                    out.push_str(" - ");
                    out.push_str(stripped);
                } else {
                    out.push_str(" + ");
                    out.push_str(t);
                }
            }
            out
        }
    }
}

impl PolyCoeff for TensorCochain {
    fn coeff_is_zero(&self) -> bool {
        TensorCochain::is_zero(self)
    }
    fn coeff_add(&self, other: &Self) -> Self {
        TensorCochain::add(self, other)
    }
    fn coeff_neg(&self) -> Self {
        TensorCochain::neg(self)
    }
    fn coeff_scale(&self, c: &Rat) -> Self {
        TensorCochain::scale(self, c)
    }
}

/// Polynomial in a formal parameter with tensor coefficients.
pub type PolyTensor = Poly<TensorCochain>;

/// Symmetric or skew bilinear form on g.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Symmetric,
    Skew,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub dim: usize,
    pub matrix: Matrix,
    pub symmetry: Symmetry,
}

impl BilinearForm {
    pub fn new(matrix: Matrix, symmetry: Symmetry) -> Result<Self, Error> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::input("bilinear form matrix must be square"));
        }
        let t = matrix.transpose();
        let ok = match symmetry {
            Symmetry::Symmetric => t == matrix,
            Symmetry::Skew => -&t == matrix,
        };
        if !ok {
            return Err(Error::input("matrix does not match the declared symmetry"));
        }
        Ok(BilinearForm {
            dim: matrix.rows(),
            matrix,
            symmetry,
        })
    }

    pub fn eval(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let mut acc = rat(0);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                acc += xi * &self.matrix[(i, j)] * yj;
            }
        }
        acc
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.rank() == self.dim
    }
}

fn check_dims(a: &PreLieAlgebra, r: &SymTensor2) -> Result<(), Error> {
    if a.dim() != r.dim() {
        return Err(Error::input(format!(
            "tensor dimension {} does not match algebra dimension {}",
            r.dim(),
            a.dim()
        )));
    }
    Ok(())
}

/// Raw three-leg bilinear kernel
/// `B(r,s) = −r_12·s_13 + r_12·s_23 + [r_13, s_23]` as a dense cube
/// `B[a][b][c]` over `g⊗g⊗g`. The S-equation tensor is `B(r,r)`.
fn s_kernel_raw(a: &PreLieAlgebra, r: &SymTensor2, s: &SymTensor2) -> Vec<Vec<Vec<Rat>>> {
    let n = a.dim();
    let lie = a.sub_adjacent();
    let mut out = vec![vec![zero_vec(n); n]; n];
    for p in 0..n {
        for q in 0..n {
            let rpq = r.get(p, q);
            if rpq.is_zero() {
                continue;
            }
            for u in 0..n {
                for v in 0..n {
                    let suv = s.get(u, v);
                    if suv.is_zero() {
                        continue;
                    }
                    let c = rpq * suv;
                    // −(e_p·e_u) ⊗ e_q ⊗ e_v
                    for (k, pk) in a.product_basis(p, u).iter().enumerate() {
                        if !pk.is_zero() {
                            out[k][q][v] -= &c * pk;
                        }
                    }
                    // + e_p ⊗ (e_q·e_u) ⊗ e_v
                    for (k, pk) in a.product_basis(q, u).iter().enumerate() {
                        if !pk.is_zero() {
                            out[p][k][v] += &c * pk;
                        }
                    }
                    // + e_p ⊗ e_u ⊗ [e_q, e_v]
                    for (k, pk) in lie.bracket_basis(q, v).iter().enumerate() {
                        if !pk.is_zero() {
                            out[p][u][k] += &c * pk;
                        }
                    }
                }
            }
        }
    }
    out
}

/// Antisymmetrize a raw cube in its first two legs by `(id − swap₁₂)/2` and
/// store over increasing wedge indices.
fn antisymmetrize_raw(raw: &[Vec<Vec<Rat>>]) -> TensorCochain {
    let n = raw.len();
    let half = crate::exactla::ratio(1, 2);
    let mut out = TensorCochain::zero(3, n);
    if n < 2 {
        return out;
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in 0..n {
                let v = (&raw[a][b][c] - &raw[b][a][c]) * &half;
                out.set(&[a, b], c, v);
            }
        }
    }
    out
}

/// The S-equation tensor `[r,r] ∈ Λ²g⊗g`, stored antisymmetrized in its
/// first two legs. Computed two independent ways and asserted equal:
/// the tensor-leg expansion, and componentwise
/// `[r,r](α,β,·) = [r♯α, r♯β]_g − r♯([α,β]_r)` on dual basis pairs.
pub fn s_equation_tensor(a: &PreLieAlgebra, r: &SymTensor2) -> Result<TensorCochain, Error> {
    check_dims(a, r)?;
    let n = a.dim();
    let raw = s_kernel_raw(a, r, r);
    // symmetric r makes the raw expansion antisymmetric on the nose
    for x in 0..n {
        for y in 0..n {
            for c in 0..n {
                debug_assert_eq!(raw[x][y][c], -raw[y][x][c].clone());
            }
        }
    }
    let tensor = antisymmetrize_raw(&raw);

    // componentwise route through the induced dual bracket
    let sharp = r.sharp();
    let lie = a.sub_adjacent();
    let dual = dual_product_cubes(a, r)?;
    for x in 0..n {
        for y in x + 1..n {
            let via_ops = crate::exactla::vec_sub(
                &lie.bracket(&sharp.column(x), &sharp.column(y)),
                &sharp.mul_vec(&dual.bracket[x][y]),
            );
            for c in 0..n {
                assert_eq!(
                    tensor.get(&[x, y], c),
                    &via_ops[c],
                    "componentwise S-equation route disagrees at ({x},{y},{c})"
                );
            }
        }
    }
    Ok(tensor)
}

/// S-equation tensor of a polynomial family `r(t)`, coefficientwise in `t`.
pub fn s_equation_poly(a: &PreLieAlgebra, rt: &Poly<SymTensor2>) -> Result<PolyTensor, Error> {
    let mut pairs = Vec::new();
    for (d1, c1) in rt.iter() {
        for (d2, c2) in rt.iter() {
            check_dims(a, c1)?;
            let raw = s_kernel_raw(a, c1, c2);
            // B(c1,c2) alone need not be antisymmetric; the degree-wise sum is
            let mut t = TensorCochain::zero(3, a.dim());
            for x in 0..a.dim() {
                for y in x + 1..a.dim() {
                    for c in 0..a.dim() {
                        let v = (&raw[x][y][c] - &raw[y][x][c]) * crate::exactla::ratio(1, 2);
                        t.set(&[x, y], c, v);
                    }
                }
            }
            pairs.push((d1 + d2, t));
        }
    }
    Ok(Poly::from_pairs(pairs))
}

impl PolyCoeff for SymTensor2 {
    fn coeff_is_zero(&self) -> bool {
        SymTensor2::is_zero(self)
    }
    fn coeff_add(&self, other: &Self) -> Self {
        SymTensor2::add(self, other)
    }
    fn coeff_neg(&self) -> Self {
        SymTensor2::neg(self)
    }
    fn coeff_scale(&self, c: &Rat) -> Self {
        SymTensor2::scale(self, c)
    }
}

/// Unverified induced products on `g*` for any symmetric tensor:
/// `dot[i][j] = e_i*·_r e_j* = ad*_{r♯e_i*}e_j* − R*_{r♯e_j*}e_i*`,
/// `star[i][j] = L*_{r♯e_i*}e_j*`, and the shared commutator bracket.
pub struct DualProductCubes {
    pub dot: Cube,
    pub star: Cube,
    pub bracket: Cube,
}

pub fn dual_product_cubes(a: &PreLieAlgebra, r: &SymTensor2) -> Result<DualProductCubes, Error> {
    check_dims(a, r)?;
    let n = a.dim();
    let sharp = r.sharp();
    let mut dot = zero_cube(n);
    let mut star = zero_cube(n);
    let mut bracket = zero_cube(n);
    let ops: Vec<(Matrix, Matrix, Matrix)> = (0..n)
        .map(|i| a.dual_operators(&sharp.column(i)).unwrap())
        .collect();
    for i in 0..n {
        let (ref lstar_i, _, ref adstar_i) = ops[i];
        for j in 0..n {
            let (_, ref rstar_j, _) = ops[j];
            let mut v = adstar_i.mul_vec(&basis_vec(n, j));
            vec_axpy(&mut v, &rat(-1), &rstar_j.mul_vec(&basis_vec(n, i)));
            dot[i][j] = v;
            star[i][j] = lstar_i.mul_vec(&basis_vec(n, j));
        }
    }
    for i in 0..n {
        for j in 0..n {
            bracket[i][j] = crate::exactla::vec_sub(&dot[i][j], &dot[j][i]);
            // the ∗-product has the same commutator
            debug_assert_eq!(
                bracket[i][j],
                crate::exactla::vec_sub(&star[i][j], &star[j][i])
            );
        }
    }
    Ok(DualProductCubes { dot, star, bracket })
}

/// Verified dual structures for an s-matrix: both induced products are
/// pre-Lie, they share the sub-adjacent bracket, and `r♯` intertwines the
/// dot product with the algebra product.
pub struct InducedDualProducts {
    pub dot: PreLieAlgebra,
    pub star: PreLieAlgebra,
    pub bracket: LieAlgebra,
}

pub fn induced_dual_products(
    a: &PreLieAlgebra,
    r: &SymTensor2,
) -> Result<InducedDualProducts, Error> {
    let report = is_s_matrix(a, r)?;
    if !report.pass {
        return Err(Error::precondition(report));
    }
    let cubes = dual_product_cubes(a, r)?;
    let dot = PreLieAlgebra::new(cubes.dot)?;
    let star = PreLieAlgebra::new(cubes.star)?;
    let bracket = LieAlgebra::new(cubes.bracket)?;
    assert_eq!(dot.sub_adjacent().cube(), bracket.cube());
    assert_eq!(star.sub_adjacent().cube(), bracket.cube());
    let n = a.dim();
    let sharp = r.sharp();
    for i in 0..n {
        for j in 0..n {
            let lhs = sharp.mul_vec(&dot.product_basis(i, j));
            let rhs = a.product(&sharp.column(i), &sharp.column(j));
            assert_eq!(
                lhs, rhs,
                "r♯ must be a pre-Lie homomorphism for the dot product"
            );
        }
    }
    Ok(InducedDualProducts { dot, star, bracket })
}

/// Pass iff the S-equation tensor vanishes. The relative Rota-Baxter route
/// for `r♯` in the context `(g^c, L*)` is computed as well and must agree,
/// and so must the Maurer-Cartan normalization `⟦r,r⟧ = −2[r,r]`.
pub fn is_s_matrix(a: &PreLieAlgebra, r: &SymTensor2) -> Result<Report, Error> {
    check_dims(a, r)?;
    let residual = s_equation_tensor(a, r)?;
    let mut report = Report::passing("S-equation [r,r] = 0");
    if !residual.is_zero() {
        report.record(failure_at(
            "S-equation residual",
            &[],
            residual.render(),
            "0".to_string(),
        ));
    }
    let ctx = RBContext::from_prelie_dual(a);
    let rb = is_relative_rb(&ctx, &r.sharp())?;
    assert_eq!(
        report.pass, rb.pass,
        "Rota-Baxter route must agree with the S-equation"
    );
    let bracket = s_bracket(a, &r.to_cochain(), &r.to_cochain())?;
    assert_eq!(
        bracket,
        residual.scale(&rat(-2)),
        "transported bracket must normalize as ⟦r,r⟧ = −2[r,r]"
    );
    Ok(report)
}

/// Ψ: `Λ^k g ⊗ g → Hom(Λ^k g*, g)`, a coefficient-table transposition.
pub fn tensor_to_map(phi: &TensorCochain) -> MapCochain {
    let n = phi.dim;
    let k = phi.arity - 1;
    let mut out = MapCochain::zero(k, n, n);
    for w in wedge_enumerate(n, k) {
        let v: Vec<Rat> = (0..n).map(|j| phi.get(w.indices(), j).clone()).collect();
        out.set(w.indices(), v);
    }
    out
}

/// Υ: `Hom(Λ^k g*, g) → Λ^k g ⊗ g`, inverse of [`tensor_to_map`].
pub fn map_to_tensor(p: &MapCochain) -> TensorCochain {
    let n = p.source_dim;
    let mut out = TensorCochain::zero(p.arity + 1, n);
    for w in wedge_enumerate(n, p.arity) {
        let v = p.eval_basis(w.indices());
        for (j, c) in v.iter().enumerate() {
            out.set(w.indices(), j, c.clone());
        }
    }
    out
}

/// The graded bracket on `C^* = ⊕_k Λ^{k-1}g⊗g`, transported through Ψ/Υ
/// from the operator bracket with ρ = L*.
pub fn s_bracket(
    a: &PreLieAlgebra,
    phi: &TensorCochain,
    psi: &TensorCochain,
) -> Result<TensorCochain, Error> {
    if phi.dim != a.dim() || psi.dim != a.dim() {
        return Err(Error::input("cochain dimensions must match the algebra"));
    }
    let ctx = RBContext::from_prelie_dual(a);
    let b = graded_bracket(&ctx, &tensor_to_map(phi), &tensor_to_map(psi))?;
    Ok(map_to_tensor(&b))
}

/// `⟦r,κ⟧` for two symmetric tensors, as a degree-3 element.
pub fn s_bracket_sym(
    a: &PreLieAlgebra,
    r: &SymTensor2,
    k: &SymTensor2,
) -> Result<TensorCochain, Error> {
    s_bracket(a, &r.to_cochain(), &k.to_cochain())
}

/// Pseudo-Hessian form `𝔅 = (r♯)⁻¹` of an invertible s-matrix: symmetric,
/// nondegenerate, and a 2-cocycle
/// (`𝔅(x·y,z) − 𝔅(x,y·z)` symmetric in `(x,y)`), all verified.
pub fn pseudo_hessian(a: &PreLieAlgebra, r: &SymTensor2) -> Result<BilinearForm, Error> {
    let report = is_s_matrix(a, r)?;
    if !report.pass {
        return Err(Error::precondition(report));
    }
    let inv = r.sharp().inverse().map_err(|e| match e {
        Error::Input(_) => Error::NotInvertible,
        other => other,
    })?;
    let form = BilinearForm::new(inv, Symmetry::Symmetric)
        .expect("inverse of a symmetric matrix is symmetric");
    assert!(form.is_nondegenerate());
    let n = a.dim();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let ez = basis_vec(n, z);
                let lhs = form.eval(&a.product_basis(x, y), &ez)
                    - form.eval(&basis_vec(n, x), &a.product(&basis_vec(n, y), &ez));
                let rhs = form.eval(&a.product_basis(y, x), &ez)
                    - form.eval(&basis_vec(n, y), &a.product(&basis_vec(n, x), &ez));
                assert_eq!(
                    lhs, rhs,
                    "pseudo-Hessian 2-cocycle identity failed at ({x},{y},{z})"
                );
            }
        }
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn s_equation_fixture_values() {
        let a2 = fixtures::a2();
        assert!(s_equation_tensor(&a2, &fixtures::r_a()).unwrap().is_zero());
        assert!(s_equation_tensor(&a2, &fixtures::r_b()).unwrap().is_zero());
        // [r_c, r_c] = −e1⊗e2⊗e2 + e2⊗e1⊗e2 = −(e1∧e2)⊗e2
        let t = s_equation_tensor(&a2, &fixtures::r_c()).unwrap();
        let mut expected = TensorCochain::zero(3, 2);
        expected.set(&[0, 1], 1, rat(-1));
        assert_eq!(t, expected);
        assert_eq!(t.render(), "-(e1∧e2)⊗e2");
    }

    #[test]
    fn s_matrix_reports() {
        let a2 = fixtures::a2();
        assert!(is_s_matrix(&a2, &SymTensor2::zero(2)).unwrap().pass);
        assert!(is_s_matrix(&a2, &fixtures::r_b()).unwrap().pass);
        let rep = is_s_matrix(&a2, &fixtures::r_c()).unwrap();
        assert!(!rep.pass);
        assert!(rep.failures[0].lhs.contains("-(e1∧e2)⊗e2"));
        // dimension mismatch is an input error
        assert!(matches!(
            is_s_matrix(&a2, &fixtures::r_n3()),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn sharp_matrices() {
        let rb = fixtures::r_b();
        let m = rb.sharp();
        // e1* ↦ e2, e2* ↦ e1
        assert_eq!(m.column(0), vec![rat(0), rat(1)]);
        assert_eq!(m.column(1), vec![rat(1), rat(0)]);
        assert!(rb.is_invertible());
        let ra = fixtures::r_a();
        assert_eq!(ra.sharp().column(0), vec![rat(1), rat(0)]);
        assert_eq!(ra.sharp().column(1), vec![rat(0), rat(0)]);
        assert!(!ra.is_invertible());
        assert!(SymTensor2::zero(2).sharp().is_zero());
    }

    #[test]
    fn dual_products_on_a2() {
        let a2 = fixtures::a2();
        // r = 0: everything vanishes
        let z = induced_dual_products(&a2, &SymTensor2::zero(2)).unwrap();
        assert!(z.dot.cube().iter().flatten().all(|v| vec_is_zero(v)));
        // r_b: dot product has e1*·e1* = e2*, everything else zero
        let d = induced_dual_products(&a2, &fixtures::r_b()).unwrap();
        assert_eq!(d.dot.product_basis(0, 0), vec![rat(0), rat(1)]);
        assert!(vec_is_zero(&d.dot.product_basis(0, 1)));
        assert!(vec_is_zero(&d.dot.product_basis(1, 0)));
        assert!(vec_is_zero(&d.dot.product_basis(1, 1)));
        // the ∗-product differs: e1*∗e1* = −e2*
        assert_eq!(d.star.product_basis(0, 0), vec![rat(0), rat(-1)]);
        // r_a: image of r♯ acts by zero
        let d = induced_dual_products(&a2, &fixtures::r_a()).unwrap();
        assert!(d.dot.cube().iter().flatten().all(|v| vec_is_zero(v)));
        // gate: r_c is rejected with the residual report
        assert!(matches!(
            induced_dual_products(&a2, &fixtures::r_c()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn pseudo_hessian_values() {
        let a2 = fixtures::a2();
        let form = pseudo_hessian(&a2, &fixtures::r_b()).unwrap();
        assert_eq!(form.matrix[(0, 1)], rat(1));
        assert_eq!(form.matrix[(1, 0)], rat(1));
        assert_eq!(form.matrix[(0, 0)], rat(0));
        assert_eq!(form.matrix[(1, 1)], rat(0));
        assert!(matches!(
            pseudo_hessian(&a2, &fixtures::r_a()),
            Err(Error::NotInvertible)
        ));
        let z2 = fixtures::z2();
        let form = pseudo_hessian(&z2, &fixtures::r_identity(2)).unwrap();
        assert_eq!(form.matrix, Matrix::identity(2));
        // the invertible dim-3 fixture also carries one
        let form = pseudo_hessian(&fixtures::n3(), &fixtures::r_n3()).unwrap();
        assert!(form.is_nondegenerate());
    }

    #[test]
    fn psi_upsilon_are_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for dim in 2..=4usize {
            for arity in 1..=3usize {
                let mut phi = TensorCochain::zero(arity, dim);
                for w in wedge_enumerate(dim, arity - 1) {
                    for j in 0..dim {
                        phi.set(w.indices(), j, rat(rng.gen_range(-3..=3)));
                    }
                }
                assert_eq!(map_to_tensor(&tensor_to_map(&phi)), phi);
            }
        }
        // Ψ of a simple tensor: φ = e1⊗e2 sends e1* to e2
        let mut phi = TensorCochain::zero(2, 2);
        phi.set(&[0], 1, rat(1));
        let p = tensor_to_map(&phi);
        assert_eq!(p.eval_basis(&[0]), vec![rat(0), rat(1)]);
        assert_eq!(p.eval_basis(&[1]), vec![rat(0), rat(0)]);
        // zero maps to zero
        assert!(tensor_to_map(&TensorCochain::zero(2, 2)).is_zero());
    }

    #[test]
    fn s_bracket_normalization() {
        let a2 = fixtures::a2();
        // ⟦r,r⟧ = −2[r,r]: zero for the s-matrix r_b…
        let rb = fixtures::r_b();
        assert!(s_bracket_sym(&a2, &rb, &rb).unwrap().is_zero());
        // …and +2(e1∧e2)⊗e2 for r_c, whose S-tensor is −(e1∧e2)⊗e2
        let rc = fixtures::r_c();
        let br = s_bracket_sym(&a2, &rc, &rc).unwrap();
        let mut expected = TensorCochain::zero(3, 2);
        expected.set(&[0, 1], 1, rat(2));
        assert_eq!(br, expected);
        // ⟦0, φ⟧ = 0
        let z = SymTensor2::zero(2);
        assert!(s_bracket_sym(&a2, &z, &rc).unwrap().is_zero());
    }

    #[test]
    fn s_bracket_normalization_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for a in [fixtures::a2(), fixtures::b2(), fixtures::n3()] {
            for _ in 0..20 {
                let r = fixtures::random_symmetric(&mut rng, a.dim());
                let tensor = s_equation_tensor(&a, &r).unwrap();
                let bracket = s_bracket_sym(&a, &r, &r).unwrap();
                assert_eq!(bracket, tensor.scale(&rat(-2)));
            }
        }
    }

    #[test]
    fn s_matrix_pool_passes() {
        for (a, r) in fixtures::s_matrix_pool() {
            assert!(
                is_s_matrix(&a, &r).unwrap().pass,
                "pool fixture failed on dim {}",
                a.dim()
            );
        }
    }
}
