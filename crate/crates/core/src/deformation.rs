//! Cohomology of s-matrices and their one-parameter infinitesimal
//! deformations: the coboundary `δφ = (−1)^{k−1}⟦r,φ⟧` on
//! `C^k = Λ^{k-1}g⊗g`, the deformation subcomplex, weak homomorphisms,
//! Nijenhuis elements and trivial deformations.
//!
//! "For all t" statements are checked coefficientwise on polynomials in a
//! formal parameter; no numeric sampling anywhere.

use crate::exactla::{
    basis_vec, bilinear_product, rat, vec_is_zero, vec_sub, wedge_enumerate, zero_vec, Matrix,
    Poly, Rat,
};
use crate::prelie::{self, fmt_vec, PreLieAlgebra};
use crate::report::{failure_at, Error, Failure, Report};
use crate::rotabaxter::{self, MapCochain, RBContext};
use crate::smatrix::{
    dual_product_cubes, is_s_matrix, map_to_tensor, s_bracket, s_equation_poly, tensor_to_map,
    SymTensor2, TensorCochain,
};
use num_traits::Zero;

/// Which cochain complex a computation runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Complex {
    Full,
    Subcomplex,
}

/// One degree of a complex: an ordered basis of `C^k` (or `C̃^k`) together
/// with the matrix of the coboundary out of it, in the bases of degree `k`
/// and `k+1`.
pub struct CochainComplexSlice {
    pub degree: usize,
    pub basis: Vec<TensorCochain>,
    pub differential: Matrix,
}

/// Verified s-matrix context with the structures every cohomology
/// computation needs: the dual products, the operator context and `r♯`.
pub struct SCohomology<'a> {
    algebra: &'a PreLieAlgebra,
    r: &'a SymTensor2,
    dot: PreLieAlgebra,
    ctx: RBContext,
    sharp: Matrix,
}

impl<'a> SCohomology<'a> {
    pub fn new(algebra: &'a PreLieAlgebra, r: &'a SymTensor2) -> Result<Self, Error> {
        let report = is_s_matrix(algebra, r)?;
        if !report.pass {
            return Err(Error::precondition(report));
        }
        let cubes = dual_product_cubes(algebra, r)?;
        let dot = PreLieAlgebra::new(cubes.dot)?;
        Ok(SCohomology {
            algebra,
            r,
            dot,
            ctx: RBContext::from_prelie_dual(algebra),
            sharp: r.sharp(),
        })
    }

    pub fn algebra(&self) -> &PreLieAlgebra {
        self.algebra
    }

    /// The coboundary `δφ`, computed three independent ways (bracket route,
    /// the two-sum direct formula on `(g*,·_r)` with trivial coefficients,
    /// and Ψ-transport of the Rota-Baxter coboundary), asserted equal.
    pub fn coboundary(&self, phi: &TensorCochain) -> TensorCochain {
        let k = phi.arity;
        let bracket = s_bracket(self.algebra, &self.r.to_cochain(), phi)
            .expect("dimensions validated at construction");
        let route1 = if (k - 1) % 2 == 0 {
            bracket
        } else {
            bracket.neg()
        };

        let direct = prelie::coboundary(
            &self.dot,
            &self.dot.trivial_rep(1),
            &phi.to_scalar_cochain(),
        )
        .expect("scalar cochain matches the dual algebra");
        let route2 = TensorCochain::from_scalar_cochain(&direct);
        assert_eq!(
            route1, route2,
            "direct-formula route disagrees with the bracket route"
        );

        let transported = rotabaxter::rb_coboundary(&self.ctx, &self.sharp, &tensor_to_map(phi))
            .expect("operator verified at construction");
        let route3 = map_to_tensor(&transported);
        assert_eq!(
            route1, route3,
            "Ψ-transport route disagrees with the bracket route"
        );
        route1
    }

    /// Unit basis of the full space `C^k = Λ^{k-1}g⊗g`.
    pub fn full_basis(&self, k: usize) -> Vec<TensorCochain> {
        assert!(k >= 1);
        let n = self.algebra.dim();
        let mut out = Vec::new();
        for w in wedge_enumerate(n, k - 1) {
            for last in 0..n {
                let mut t = TensorCochain::zero(k, n);
                t.set(w.indices(), last, rat(1));
                out.push(t);
            }
        }
        out
    }

    /// Basis of the deformation subcomplex `C̃^k`:
    /// degree 1 is `{x | (R_x⊗1 + 1⊗R_x)r = 0}`, degree 2 the symmetric
    /// tensors, degree 3 the kernel of the cyclic sum, degree ≥ 4 all of
    /// `C^k`.
    pub fn tilde_basis(&self, k: usize) -> Vec<TensorCochain> {
        let n = self.algebra.dim();
        match k {
            0 => panic!("degrees start at 1"),
            1 => {
                // columns: condition tensor of e_i, flattened
                let cols: Vec<Vec<Rat>> = (0..n)
                    .map(|i| {
                        let t = c1_condition(self.algebra, self.r, &basis_vec(n, i));
                        t.into_iter().flatten().collect()
                    })
                    .collect();
                let m = Matrix::from_cols(n * n, cols);
                m.nullspace_basis()
                    .into_iter()
                    .map(TensorCochain::from_vector)
                    .collect()
            }
            2 => {
                let mut out = Vec::new();
                for i in 0..n {
                    for j in i..n {
                        let mut t = TensorCochain::zero(2, n);
                        t.set(&[i], j, rat(1));
                        if j != i {
                            t.set(&[j], i, rat(1));
                        }
                        out.push(t);
                    }
                }
                out
            }
            3 => {
                // kernel of φ ↦ φ(α1,α2,α3) + φ(α2,α3,α1) + φ(α3,α1,α2)
                let full = self.full_basis(3);
                if full.is_empty() {
                    return full;
                }
                let mut rows = Vec::new();
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            let row: Vec<Rat> = full
                                .iter()
                                .map(|t| {
                                    t.eval_dual_basis(&[a, b, c])
                                        + t.eval_dual_basis(&[b, c, a])
                                        + t.eval_dual_basis(&[c, a, b])
                                })
                                .collect();
                            rows.push(row);
                        }
                    }
                }
                let kernel = Matrix::from_rows(rows).nullspace_basis();
                kernel
                    .into_iter()
                    .map(|coords| {
                        let mut t = TensorCochain::zero(3, n);
                        for (b, c) in full.iter().zip(&coords) {
                            t = t.add(&b.scale(c));
                        }
                        t
                    })
                    .collect()
            }
            _ => self.full_basis(k),
        }
    }

    pub fn basis(&self, k: usize, which: Complex) -> Vec<TensorCochain> {
        match which {
            Complex::Full => self.full_basis(k),
            Complex::Subcomplex => self.tilde_basis(k),
        }
    }

    /// Matrix of δ from the given domain basis into the codomain basis.
    /// Panics when some image falls outside the codomain span — for the
    /// subcomplex that would violate closure, which holds for every
    /// verified s-matrix.
    fn delta_matrix(
        &self,
        domain: &[TensorCochain],
        codomain: &[TensorCochain],
        k: usize,
    ) -> Matrix {
        let n = self.algebra.dim();
        let target_len = crate::exactla::binomial(n, k) * n;
        let cod = Matrix::from_cols(
            target_len,
            codomain.iter().map(|t| t.flat_coeffs().to_vec()).collect(),
        );
        let mut cols = Vec::with_capacity(domain.len());
        for b in domain {
            let image = self.coboundary(b);
            let coords = cod
                .solve(image.flat_coeffs())
                .expect("subcomplex closure: δ of a basis element left the next degree");
            cols.push(coords);
        }
        Matrix::from_cols(codomain.len(), cols)
    }

    pub fn complex_slice(&self, k: usize, which: Complex) -> CochainComplexSlice {
        let basis = self.basis(k, which);
        let next = self.basis(k + 1, which);
        let differential = self.delta_matrix(&basis, &next, k);
        CochainComplexSlice {
            degree: k,
            basis,
            differential,
        }
    }

    /// `dim H^k` for `1 ≤ k ≤ kmax` on the requested complex.
    /// `H^1 = ker δ|_{C^1}`; beyond, `dim H^k = nullity δ_k − rank δ_{k−1}`.
    pub fn cohomology_dims(&self, kmax: usize, which: Complex) -> Vec<usize> {
        let mut dims = Vec::with_capacity(kmax);
        let mut prev_rank = 0usize;
        let mut prev: Option<CochainComplexSlice> = None;
        for k in 1..=kmax {
            let slice = self.complex_slice(k, which);
            if let Some(p) = &prev {
                // δ∘δ = 0 at the matrix level
                assert!((&slice.differential * &p.differential).is_zero());
            }
            let rank = slice.differential.rank();
            let nullity = slice.basis.len() - rank;
            dims.push(nullity - prev_rank);
            prev_rank = rank;
            prev = Some(slice);
        }
        dims
    }

    /// Coordinates of a 2-cocycle's class in a deterministically chosen
    /// basis of `H̃²`: the kernel basis of `δ̃²` is filtered greedily
    /// against the image of `δ̃¹`, and the class is read off the solved
    /// decomposition.
    pub fn class_vector(&self, kappa: &SymTensor2) -> Vec<Rat> {
        let c2 = self.tilde_basis(2);
        let c3 = self.tilde_basis(3);
        let d2 = self.delta_matrix(&c2, &c3, 2);
        let kernel = d2.nullspace_basis(); // coordinates in c2
        let c1 = self.tilde_basis(1);

        let flat_len = self.algebra.dim() * self.algebra.dim();
        let c2_matrix = Matrix::from_cols(
            flat_len,
            c2.iter().map(|t| t.flat_coeffs().to_vec()).collect(),
        );
        let in_c2 = |t: &TensorCochain| -> Vec<Rat> {
            c2_matrix
                .solve(t.flat_coeffs())
                .expect("symmetric tensors lie in the degree-2 subcomplex")
        };

        // image of δ̃¹ in c2 coordinates, then a greedy completion by
        // kernel vectors; together they span ker δ̃²
        let mut spanning: Vec<Vec<Rat>> = Vec::new();
        let mut rank = 0usize;
        let push_if_independent =
            |v: Vec<Rat>, spanning: &mut Vec<Vec<Rat>>, rank: &mut usize| -> bool {
                spanning.push(v);
                let m = Matrix::from_cols(c2.len(), spanning.clone());
                if m.rank() > *rank {
                    *rank += 1;
                    true
                } else {
                    spanning.pop();
                    false
                }
            };
        for b in &c1 {
            let img = self.coboundary(b);
            if img.is_zero() {
                continue;
            }
            push_if_independent(in_c2(&img), &mut spanning, &mut rank);
        }
        let mut class_positions = Vec::new();
        for kvec in kernel {
            if push_if_independent(kvec, &mut spanning, &mut rank) {
                class_positions.push(spanning.len() - 1);
            }
        }
        let decomposition = Matrix::from_cols(c2.len(), spanning)
            .solve(&in_c2(&kappa.to_cochain()))
            .expect("2-cocycles decompose over image and representatives");
        class_positions
            .iter()
            .map(|&p| decomposition[p].clone())
            .collect()
    }
}

/// `(R_x⊗1 + 1⊗R_x) r` as a dense g⊗g table; membership in `C̃¹` is this
/// vanishing.
fn c1_condition(a: &PreLieAlgebra, r: &SymTensor2, x: &[Rat]) -> Vec<Vec<Rat>> {
    let (_, rx) = a.mult_operators(x).expect("length checked by caller");
    let n = a.dim();
    let mut out = vec![zero_vec(n); n];
    for p in 0..n {
        for q in 0..n {
            let c = r.get(p, q);
            if c.is_zero() {
                continue;
            }
            for (k, m) in rx.column(p).iter().enumerate() {
                if !m.is_zero() {
                    out[k][q] += c * m;
                }
            }
            for (k, m) in rx.column(q).iter().enumerate() {
                if !m.is_zero() {
                    out[p][k] += c * m;
                }
            }
        }
    }
    out
}

/// δ of an s-matrix cochain; three routes computed and asserted equal.
pub fn s_coboundary(
    a: &PreLieAlgebra,
    r: &SymTensor2,
    phi: &TensorCochain,
) -> Result<TensorCochain, Error> {
    Ok(SCohomology::new(a, r)?.coboundary(phi))
}

/// Coboundary of the relative Rota-Baxter operator `r♯` on
/// `Hom(Λ^k g*, g)`; evaluates the three-sum formula in the context
/// `(g^c, L*)`.
pub fn rb_coboundary(
    a: &PreLieAlgebra,
    r: &SymTensor2,
    p: &MapCochain,
) -> Result<MapCochain, Error> {
    let report = is_s_matrix(a, r)?;
    if !report.pass {
        return Err(Error::precondition(report));
    }
    let ctx = RBContext::from_prelie_dual(a);
    rotabaxter::rb_coboundary(&ctx, &r.sharp(), p)
}

/// Ordered basis of `C̃^k`.
pub fn tilde_basis(
    a: &PreLieAlgebra,
    r: &SymTensor2,
    k: usize,
) -> Result<Vec<TensorCochain>, Error> {
    if k == 0 {
        return Err(Error::input("cochain degrees start at 1"));
    }
    Ok(SCohomology::new(a, r)?.tilde_basis(k))
}

/// `dim H^k` (full) or `dim H̃^k` (subcomplex) for `1 ≤ k ≤ kmax`.
pub fn cohomology_dims(
    a: &PreLieAlgebra,
    r: &SymTensor2,
    kmax: usize,
    which: Complex,
) -> Result<Vec<usize>, Error> {
    Ok(SCohomology::new(a, r)?.cohomology_dims(kmax, which))
}

fn check_square(a: &PreLieAlgebra, m: &Matrix, name: &str) -> Result<(), Error> {
    if m.rows() != a.dim() || m.cols() != a.dim() {
        return Err(Error::input(format!("{name} must be an n x n matrix")));
    }
    Ok(())
}

/// Weak homomorphism of s-matrices from `r2` to `r1`: a pair (φ, ϕ) with
/// φ a Lie endomorphism of `g^c`, `(ϕ⊗Id)r1 = (Id⊗φ)r2` and
/// `ϕ(φ(x)·y) = x·ϕ(y)`. Also cross-checked against the Rota-Baxter
/// homomorphism route with ψ = ϕᵀ; the two must agree.
pub fn is_weak_homomorphism(
    a: &PreLieAlgebra,
    r1: &SymTensor2,
    r2: &SymTensor2,
    phi: &Matrix,
    varphi: &Matrix,
) -> Result<Report, Error> {
    if r1.dim() != a.dim() || r2.dim() != a.dim() {
        return Err(Error::input("tensor dimensions must match the algebra"));
    }
    check_square(a, phi, "phi")?;
    check_square(a, varphi, "varphi")?;
    let n = a.dim();
    let mut report = Report::passing("weak homomorphism of s-matrices");
    // (ϕ⊗Id)r1 = (Id⊗φ)r2 as coefficient tables
    let lhs = varphi * &r1.sharp();
    let rhs = &r2.sharp() * &phi.transpose();
    if lhs != rhs {
        report.record(failure_at(
            "(varphi ⊗ Id) r1 = (Id ⊗ phi) r2",
            &[],
            format!("{lhs:?}"),
            format!("{rhs:?}"),
        ));
    }
    // ϕ(φ(x)·y) = x·ϕ(y) on basis x
    'weak2: for i in 0..n {
        let l_phi = a.mult_operators(&phi.column(i))?.0;
        let lhs = varphi * &l_phi;
        let rhs = &a.left_mult(i) * varphi;
        if lhs != rhs {
            report.record(failure_at(
                "varphi(phi(x).y) = x.varphi(y)",
                &[i],
                format!("{lhs:?}"),
                format!("{rhs:?}"),
            ));
            break 'weak2;
        }
    }
    // φ is a Lie algebra endomorphism of g^c
    let lie = a.sub_adjacent();
    'hom: for i in 0..n {
        for j in i + 1..n {
            let lhs = phi.mul_vec(&lie.bracket_basis(i, j));
            let rhs = lie.bracket(&phi.column(i), &phi.column(j));
            if lhs != rhs {
                report.record(failure_at(
                    "phi is a Lie algebra homomorphism",
                    &[i, j],
                    fmt_vec(&lhs),
                    fmt_vec(&rhs),
                ));
                break 'hom;
            }
        }
    }
    // equivalence with the Rota-Baxter homomorphism formulation
    let ctx = RBContext::from_prelie_dual(a);
    let rb =
        rotabaxter::is_rb_homomorphism(&ctx, &r1.sharp(), &r2.sharp(), phi, &varphi.transpose())?;
    assert_eq!(
        report.pass, rb.pass,
        "weak homomorphism and operator homomorphism routes must agree"
    );
    Ok(report)
}

/// Outcome of probing a deformation direction κ against an s-matrix r.
#[derive(Clone, Debug)]
pub struct DeformationReport {
    pub direction: SymTensor2,
    /// `⟦r,κ⟧ = 0`.
    pub is_two_cocycle: bool,
    /// `⟦r,κ⟧ = 0` and `⟦κ,κ⟧ = 0`: `r + tκ` solves the S-equation
    /// identically in t.
    pub is_full_deformation: bool,
    /// Class of κ in `H̃²` when κ is a 2-cocycle.
    pub cohomology_class: Option<Vec<Rat>>,
}

/// Probe κ as a deformation direction of r.
pub fn deformation_report(
    a: &PreLieAlgebra,
    r: &SymTensor2,
    kappa: &SymTensor2,
) -> Result<DeformationReport, Error> {
    if kappa.dim() != a.dim() {
        return Err(Error::input("kappa dimension must match the algebra"));
    }
    let coh = SCohomology::new(a, r)?;
    let r_kappa = s_bracket(a, &r.to_cochain(), &kappa.to_cochain())?;
    let kappa_kappa = s_bracket(a, &kappa.to_cochain(), &kappa.to_cochain())?;
    let is_two_cocycle = r_kappa.is_zero();
    let is_full_deformation = is_two_cocycle && kappa_kappa.is_zero();

    // cross-check through the S-equation of r + tκ, coefficientwise:
    // the t¹ coefficient is −⟦r,κ⟧ and the t² coefficient is −⟦κ,κ⟧/2
    let rt = Poly::from_pairs(vec![(0, r.clone()), (1, kappa.clone())]);
    let s_poly = s_equation_poly(a, &rt)?;
    let t1 = s_poly
        .coeff(1)
        .cloned()
        .unwrap_or_else(|| TensorCochain::zero(3, a.dim()));
    assert_eq!(
        t1.scale(&rat(-1)),
        r_kappa,
        "t¹ of the deformed S-equation must be −⟦r,κ⟧"
    );
    let t2 = s_poly
        .coeff(2)
        .cloned()
        .unwrap_or_else(|| TensorCochain::zero(3, a.dim()));
    assert_eq!(
        t2.scale(&rat(-2)),
        kappa_kappa,
        "t² of the deformed S-equation must be −⟦κ,κ⟧/2"
    );
    assert_eq!(is_full_deformation, s_poly.is_zero());

    let cohomology_class = if is_two_cocycle {
        Some(coh.class_vector(kappa))
    } else {
        None
    };
    Ok(DeformationReport {
        direction: kappa.clone(),
        is_two_cocycle,
        is_full_deformation,
        cohomology_class,
    })
}

fn membership_failure(a: &PreLieAlgebra, r: &SymTensor2, x: &[Rat]) -> Option<Failure> {
    let cond = c1_condition(a, r, x);
    if cond.iter().all(|row| vec_is_zero(row)) {
        None
    } else {
        Some(failure_at(
            "x lies in the degree-1 subcomplex: (R_x⊗1 + 1⊗R_x)r = 0",
            &[],
            fmt_vec(&cond.concat()),
            "0".to_string(),
        ))
    }
}

/// The three weak-homomorphism conditions for the pair
/// `(Id + t·ad_x, Id − t·L_x)` from `r + tκ₂` to `r + tκ₁`, checked on
/// every coefficient of t. Also asserts the class identity
/// `κ₂ − κ₁ = δ(x)` whenever everything passes.
fn weak_hom_in_t(
    a: &PreLieAlgebra,
    r: &SymTensor2,
    kappa1: &SymTensor2,
    kappa2: &SymTensor2,
    x: &[Rat],
) -> Result<Report, Error> {
    let n = a.dim();
    let (lx, rx) = a.mult_operators(x)?;
    let adx = &lx - &rx;
    let mut report = Report::passing("weak homomorphism in a formal parameter");

    // φ_t = Id + t·ad_x is a Lie homomorphism of g^c, coefficientwise
    let lie = a.sub_adjacent();
    'lie: for i in 0..n {
        for j in i + 1..n {
            let br = lie.bracket_basis(i, j);
            let ad_i = adx.column(i);
            let ad_j = adx.column(j);
            let t1 = vec_sub(
                &adx.mul_vec(&br),
                &crate::exactla::vec_add(
                    &lie.bracket(&ad_i, &basis_vec(n, j)),
                    &lie.bracket(&basis_vec(n, i), &ad_j),
                ),
            );
            let t2 = lie.bracket(&ad_i, &ad_j);
            if !vec_is_zero(&t1) || !vec_is_zero(&t2) {
                report.record(failure_at(
                    "Id + t·ad_x preserves the bracket (t¹, t² coefficients)",
                    &[i, j],
                    format!("t¹: {}, t²: {}", fmt_vec(&t1), fmt_vec(&t2)),
                    "0".to_string(),
                ));
                break 'lie;
            }
        }
    }

    // (ϕ_t ⊗ Id)(r + tκ₁) = (Id ⊗ φ_t)(r + tκ₂), coefficientwise
    let id = Matrix::identity(n);
    let varphi_t: Poly<Matrix> = Poly::from_pairs(vec![(0, id.clone()), (1, -&lx)]);
    let phi_t_transpose: Poly<Matrix> =
        Poly::from_pairs(vec![(0, id.clone()), (1, adx.transpose())]);
    let r1_t: Poly<Matrix> = Poly::from_pairs(vec![(0, r.sharp()), (1, kappa1.sharp())]);
    let r2_t: Poly<Matrix> = Poly::from_pairs(vec![(0, r.sharp()), (1, kappa2.sharp())]);
    let lhs = bilinear_product(&varphi_t, &r1_t, |a, b| a * b);
    let rhs = bilinear_product(&r2_t, &phi_t_transpose, |a, b| a * b);
    let weak1 = lhs.sub(&rhs);
    if !weak1.is_zero() {
        let degs = weak1.degrees();
        report.record(failure_at(
            "(varphi_t ⊗ Id) r1_t = (Id ⊗ phi_t) r2_t",
            &[],
            format!("nonzero t-degrees {degs:?}"),
            "0".to_string(),
        ));
    }

    // ϕ_t(φ_t(e_i)·y) = e_i·ϕ_t(y), coefficientwise
    'weak2: for i in 0..n {
        let l_ad_i = a.mult_operators(&adx.column(i))?.0;
        let l_phi_i: Poly<Matrix> = Poly::from_pairs(vec![(0, a.left_mult(i)), (1, l_ad_i)]);
        let lhs = bilinear_product(&varphi_t, &l_phi_i, |a, b| a * b);
        let rhs = bilinear_product(&Poly::constant(a.left_mult(i)), &varphi_t, |a, b| a * b);
        let diff = lhs.sub(&rhs);
        if !diff.is_zero() {
            report.record(failure_at(
                "varphi_t(phi_t(x).y) = x.varphi_t(y)",
                &[i],
                format!("nonzero t-degrees {:?}", diff.degrees()),
                "0".to_string(),
            ));
            break 'weak2;
        }
    }

    if report.pass {
        // the t¹ coefficient of the first condition forces κ₂ − κ₁ = δ(x)
        let delta_x = s_coboundary(a, r, &TensorCochain::from_vector(x.to_vec()))?;
        let diff = kappa2.to_cochain().sub(&kappa1.to_cochain());
        assert_eq!(diff, delta_x, "equivalent deformations must differ by δ(x)");
    }
    Ok(report)
}

/// Are `r + tκ₁` and `r + tκ₂` equivalent through `x ∈ C̃¹`? Both
/// directions must be 2-cocycles and x must lie in the degree-1
/// subcomplex; the weak-homomorphism conditions are then polynomial
/// identities in t.
pub fn deformations_equivalent(
    a: &PreLieAlgebra,
    r: &SymTensor2,
    kappa1: &SymTensor2,
    kappa2: &SymTensor2,
    x: &[Rat],
) -> Result<Report, Error> {
    if x.len() != a.dim() {
        return Err(Error::input("x must have the algebra dimension"));
    }
    for (name, kappa) in [("kappa1", kappa1), ("kappa2", kappa2)] {
        let rep = deformation_report(a, r, kappa)?;
        if !rep.is_two_cocycle {
            return Err(Error::precondition(Report::failing(
                "deformation directions must be 2-cocycles",
                failure_at(
                    &format!("{name} is a 2-cocycle"),
                    &[],
                    "nonzero ⟦r,κ⟧".into(),
                    "0".into(),
                ),
            )));
        }
    }
    if let Some(f) = membership_failure(a, r, x) {
        return Err(Error::precondition(Report::failing(
            "x must lie in the degree-1 subcomplex",
            f,
        )));
    }
    weak_hom_in_t(a, r, kappa1, kappa2, x)
}

/// Nijenhuis element check: membership in `C̃¹` together with
/// `[[x,y],[x,z]] = 0`, `(Id⊗ad_x)(Id⊗ad_x + L_x⊗Id)r = 0` and
/// `x·([x,y]·z) = 0`.
pub fn is_nijenhuis(a: &PreLieAlgebra, r: &SymTensor2, x: &[Rat]) -> Result<Report, Error> {
    if x.len() != a.dim() {
        return Err(Error::input("x must have the algebra dimension"));
    }
    let coh = SCohomology::new(a, r)?;
    let n = a.dim();
    let mut report = Report::passing("Nijenhuis element conditions");

    // membership through the subcomplex basis
    let basis = coh.tilde_basis(1);
    let span = Matrix::from_cols(n, basis.iter().map(|t| t.to_vector()).collect());
    if span.solve(x).is_none() {
        report.record(failure_at(
            "x lies in the degree-1 subcomplex",
            &[],
            fmt_vec(x),
            format!("span of {} basis vectors", basis.len()),
        ));
    }

    let lie = a.sub_adjacent();
    let (lx, rx) = a.mult_operators(x)?;
    let adx = &lx - &rx;
    'nij1: for y in 0..n {
        for z in 0..n {
            let v = lie.bracket(&adx.column(y), &adx.column(z));
            if !vec_is_zero(&v) {
                report.record(failure_at(
                    "[[x,y],[x,z]] = 0",
                    &[y, z],
                    fmt_vec(&v),
                    "0".to_string(),
                ));
                break 'nij1;
            }
        }
    }
    // (Id⊗ad_x)(Id⊗ad_x + L_x⊗Id)r = 0
    let inner = {
        let mut t = t2_apply_second(&adx, r.table());
        let left = t2_apply_first(&lx, r.table());
        for (row_t, row_l) in t.iter_mut().zip(&left) {
            for (a, b) in row_t.iter_mut().zip(row_l) {
                *a += b;
            }
        }
        t
    };
    let outer = t2_apply_second(&adx, &inner);
    if outer.iter().any(|row| !vec_is_zero(row)) {
        report.record(failure_at(
            "(Id⊗ad_x)(Id⊗ad_x + L_x⊗Id)r = 0",
            &[],
            fmt_vec(&outer.concat()),
            "0".to_string(),
        ));
    }
    'nij3: for y in 0..n {
        for z in 0..n {
            let v = a.product(x, &a.product(&adx.column(y), &basis_vec(n, z)));
            if !vec_is_zero(&v) {
                report.record(failure_at(
                    "x.([x,y].z) = 0",
                    &[y, z],
                    fmt_vec(&v),
                    "0".to_string(),
                ));
                break 'nij3;
            }
        }
    }
    Ok(report)
}

fn t2_apply_first(m: &Matrix, t: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = t.len();
    let mut out = vec![zero_vec(n); n];
    for p in 0..n {
        for q in 0..n {
            if t[p][q].is_zero() {
                continue;
            }
            for i in 0..n {
                if !m[(i, p)].is_zero() {
                    out[i][q] += &m[(i, p)] * &t[p][q];
                }
            }
        }
    }
    out
}

fn t2_apply_second(m: &Matrix, t: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = t.len();
    let mut out = vec![zero_vec(n); n];
    for p in 0..n {
        for q in 0..n {
            if t[p][q].is_zero() {
                continue;
            }
            for j in 0..n {
                if !m[(j, q)].is_zero() {
                    out[p][j] += &m[(j, q)] * &t[p][q];
                }
            }
        }
    }
    out
}

/// The trivial deformation `r_t = r + t⟦r,x⟧` generated by a Nijenhuis
/// element. Asserts that `⟦r,x⟧` is symmetric, that `r_t` solves the
/// S-equation identically in t, and that `(Id + t·ad_x, Id − t·L_x)` is a
/// weak homomorphism from `r_t` to `r` coefficientwise.
pub fn trivial_deformation(
    a: &PreLieAlgebra,
    r: &SymTensor2,
    x: &[Rat],
) -> Result<Poly<SymTensor2>, Error> {
    let nij = is_nijenhuis(a, r, x)?;
    if !nij.pass {
        return Err(Error::precondition(nij));
    }
    let direction = s_bracket(a, &r.to_cochain(), &TensorCochain::from_vector(x.to_vec()))?;
    let kappa = direction.to_sym()?; // symmetric by the Nijenhuis conditions
    let rt = Poly::from_pairs(vec![(0, r.clone()), (1, kappa.clone())]);
    assert!(
        s_equation_poly(a, &rt)?.is_zero(),
        "trivial deformation must solve the S-equation identically in t"
    );
    let certificate = weak_hom_in_t(a, r, &SymTensor2::zero(a.dim()), &kappa, x)?;
    assert!(
        certificate.pass,
        "trivial deformation certificate failed: {}",
        certificate.summary()
    );
    Ok(rt)
}

/// Scan Nijenhuis candidates: basis vectors and sums of two basis vectors
/// with coefficients in {−1, 1}, in deterministic order. Returns the
/// passing vectors.
pub fn scan_nijenhuis(a: &PreLieAlgebra, r: &SymTensor2) -> Result<Vec<Vec<Rat>>, Error> {
    let n = a.dim();
    let mut candidates = Vec::new();
    for i in 0..n {
        for c in [1i64, -1] {
            let mut v = zero_vec(n);
            v[i] = rat(c);
            candidates.push(v);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for ci in [1i64, -1] {
                for cj in [1i64, -1] {
                    let mut v = zero_vec(n);
                    v[i] = rat(ci);
                    v[j] = rat(cj);
                    candidates.push(v);
                }
            }
        }
    }
    let mut passing = Vec::new();
    for v in candidates {
        if is_nijenhuis(a, r, &v)?.pass {
            passing.push(v);
        }
    }
    Ok(passing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_tensor(rng: &mut ChaCha8Rng, arity: usize, n: usize) -> TensorCochain {
        let mut t = TensorCochain::zero(arity, n);
        for w in wedge_enumerate(n, arity - 1) {
            for last in 0..n {
                t.set(w.indices(), last, rat(rng.gen_range(-2..=2)));
            }
        }
        t
    }

    #[test]
    fn coboundary_of_degree_one_elements_on_a2() {
        let a2 = fixtures::a2();
        let rb = fixtures::r_b();
        let coh = SCohomology::new(&a2, &rb).unwrap();
        // δ(e1) = 0
        assert!(coh
            .coboundary(&TensorCochain::from_vector(basis_vec(2, 0)))
            .is_zero());
        // δ(e2) = −(Id⊗ad_{e2} + L_{e2}⊗Id) r_b = −e1⊗e1
        let d = coh.coboundary(&TensorCochain::from_vector(basis_vec(2, 1)));
        let mut expected = TensorCochain::zero(2, 2);
        expected.set(&[0], 0, rat(-1));
        assert_eq!(d, expected);
        // δ(0) = 0
        assert!(coh.coboundary(&TensorCochain::zero(2, 2)).is_zero());
    }

    #[test]
    fn coboundary_squares_to_zero_on_pool() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for (a, r) in fixtures::s_matrix_pool() {
            let coh = SCohomology::new(&a, &r).unwrap();
            for arity in 1..=2 {
                let phi = random_tensor(&mut rng, arity, a.dim());
                let d1 = coh.coboundary(&phi);
                let d2 = coh.coboundary(&d1);
                assert!(d2.is_zero());
            }
        }
    }

    #[test]
    fn transport_commutes_with_rb_coboundary() {
        // Ψ(δφ) = δ_RB(Ψφ) on random cochains
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let a2 = fixtures::a2();
        let rb = fixtures::r_b();
        let coh = SCohomology::new(&a2, &rb).unwrap();
        for arity in 1..=3 {
            let phi = random_tensor(&mut rng, arity, 2);
            let lhs = tensor_to_map(&coh.coboundary(&phi));
            let rhs = rb_coboundary(&a2, &rb, &tensor_to_map(&phi)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn tilde_basis_examples() {
        let a2 = fixtures::a2();
        let rb = fixtures::r_b();
        // C̃¹(A2, r_b) = span{e1}
        let b1 = tilde_basis(&a2, &rb, 1).unwrap();
        assert_eq!(b1.len(), 1);
        assert_eq!(b1[0].to_vector(), basis_vec(2, 0));
        // Z2 with any r: all of g
        let z2 = fixtures::z2();
        let b1 = tilde_basis(&z2, &fixtures::r_identity(2), 1).unwrap();
        assert_eq!(b1.len(), 2);
        // degree 2: symmetric tensors, n(n+1)/2 of them
        assert_eq!(tilde_basis(&a2, &rb, 2).unwrap().len(), 3);
        assert_eq!(
            tilde_basis(&fixtures::n3(), &fixtures::r_n3(), 2)
                .unwrap()
                .len(),
            6
        );
        // degree ≥ 4 falls back to the full space
        assert_eq!(tilde_basis(&a2, &rb, 4).unwrap().len(), 0);
        let full4 = tilde_basis(&fixtures::n3(), &fixtures::r_n3(), 4).unwrap();
        assert_eq!(full4.len(), 3); // Λ³ of dim 3 is 1-dimensional, ⊗ g
    }

    #[test]
    fn c1_membership_on_n3() {
        // x = a e1 + b e2 + c e3 lies in C̃¹ iff a = b = 0
        let n3 = fixtures::n3();
        let r = fixtures::r_n3();
        let basis = tilde_basis(&n3, &r, 1).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].to_vector(), basis_vec(3, 2));
    }

    #[test]
    fn cohomology_dims_on_fixtures() {
        let a2 = fixtures::a2();
        let rb = fixtures::r_b();
        // subcomplex: dim H̃¹ = 1 (C̃¹ = span{e1}, δ = 0 on it)
        let dims = cohomology_dims(&a2, &rb, 1, Complex::Subcomplex).unwrap();
        assert_eq!(dims, vec![1]);
        // Z2 with the identity tensor: zero differential everywhere
        let z2 = fixtures::z2();
        let dims = cohomology_dims(&z2, &fixtures::r_identity(2), 1, Complex::Subcomplex).unwrap();
        assert_eq!(dims, vec![2]);
        // full complex on (A2, r_b) through degree 3: frozen from the
        // explicit differential matrices (δ¹ kills e1 only; δ² sees only
        // the e2⊗e2 coefficient)
        let dims = cohomology_dims(&a2, &rb, 3, Complex::Full).unwrap();
        assert_eq!(dims, vec![1, 2, 1]);
        let dims = cohomology_dims(&a2, &rb, 3, Complex::Subcomplex).unwrap();
        assert_eq!(dims, vec![1, 2, 1]);
    }

    #[test]
    fn cohomology_dims_regressions() {
        // frozen against an independent exact implementation of the
        // direct-formula differentials
        let n3 = fixtures::n3();
        let rn3 = fixtures::r_n3();
        assert_eq!(
            cohomology_dims(&n3, &rn3, 4, Complex::Full).unwrap(),
            vec![1, 3, 3, 1]
        );
        assert_eq!(
            cohomology_dims(&n3, &rn3, 4, Complex::Subcomplex).unwrap(),
            vec![1, 3, 3, 1]
        );
        // b2 separates the two complexes: the symmetric-tensor constraint
        // cuts the degree-2 cocycles from 3 down to 2
        let b2 = fixtures::b2();
        let rb2 = fixtures::r_b2();
        assert_eq!(
            cohomology_dims(&b2, &rb2, 3, Complex::Full).unwrap(),
            vec![1, 2, 1]
        );
        assert_eq!(
            cohomology_dims(&b2, &rb2, 3, Complex::Subcomplex).unwrap(),
            vec![1, 1, 1]
        );
    }

    #[test]
    fn subcomplex_closure_on_pool() {
        for (a, r) in fixtures::s_matrix_pool() {
            let coh = SCohomology::new(&a, &r).unwrap();
            // delta_matrix panics on closure violation; building the dims
            // through degree 4 exercises C̃¹→C̃²→C̃³→C̃⁴
            let _ = coh.cohomology_dims(4.min(a.dim() + 1), Complex::Subcomplex);
        }
    }

    #[test]
    fn weak_homomorphism_examples() {
        let a2 = fixtures::a2();
        let id = Matrix::identity(2);
        let rb = fixtures::r_b();
        assert!(is_weak_homomorphism(&a2, &rb, &rb, &id, &id).unwrap().pass);
        // r_b vs r_c with identities fails the tensor condition
        let rep = is_weak_homomorphism(&a2, &rb, &fixtures::r_c(), &id, &id).unwrap();
        assert!(!rep.pass);
        assert!(rep.failures[0].condition.contains("r1"));
        // a nontrivial pair on b2: phi = Id + ad_{e2}, varphi = Id
        let b2 = fixtures::b2();
        let r = fixtures::r_b2();
        let (l2, r2op) = b2.mult_operators(&basis_vec(2, 1)).unwrap();
        let phi = &Matrix::identity(2) + &(&l2 - &r2op);
        assert!(
            is_weak_homomorphism(&b2, &r, &r, &phi, &Matrix::identity(2))
                .unwrap()
                .pass
        );
    }

    #[test]
    fn deformation_reports_on_a2_rb() {
        let a2 = fixtures::a2();
        let rb = fixtures::r_b();
        // κ = 0: full deformation, zero class
        let rep = deformation_report(&a2, &rb, &SymTensor2::zero(2)).unwrap();
        assert!(rep.is_two_cocycle && rep.is_full_deformation);
        assert!(rep.cohomology_class.unwrap().iter().all(|c| c.is_zero()));
        // κ = r_a: ⟦r_b, r_a⟧ = 0 and r_a is itself an s-matrix
        let rep = deformation_report(&a2, &rb, &fixtures::r_a()).unwrap();
        assert!(rep.is_two_cocycle);
        assert!(rep.is_full_deformation);
        // its class is nonzero: the image of δ̃¹ is zero here
        assert!(rep.cohomology_class.unwrap().iter().any(|c| !c.is_zero()));
        // κ = r_c: ⟦r_b, r_c⟧ ≠ 0 (the κ₂₂ coefficient obstructs)
        let rep = deformation_report(&a2, &rb, &fixtures::r_c()).unwrap();
        assert!(!rep.is_two_cocycle && !rep.is_full_deformation);
        assert!(rep.cohomology_class.is_none());
    }

    #[test]
    fn equivalence_examples() {
        let a2 = fixtures::a2();
        let rb = fixtures::r_b();
        let z = SymTensor2::zero(2);
        // κ1 = κ2, x = 0
        assert!(
            deformations_equivalent(&a2, &rb, &z, &z, &zero_vec(2))
                .unwrap()
                .pass
        );
        // x = e1: all attached operators vanish
        assert!(
            deformations_equivalent(&a2, &rb, &z, &z, &basis_vec(2, 0))
                .unwrap()
                .pass
        );
        // κ1 = r_a ≠ 0 = κ2 with x = e1 fails: δ(e1) = 0 ≠ κ₂ − κ₁
        let rep =
            deformations_equivalent(&a2, &rb, &fixtures::r_a(), &z, &basis_vec(2, 0)).unwrap();
        assert!(!rep.pass);
        // x = e2 is rejected outright: not in C̃¹
        assert!(matches!(
            deformations_equivalent(&a2, &rb, &z, &z, &basis_vec(2, 1)),
            Err(Error::Precondition(_))
        ));
        // a nontrivial passing equivalence on b2 with x = e2
        let b2 = fixtures::b2();
        let r = fixtures::r_b2();
        let rep = deformations_equivalent(&b2, &r, &z, &z, &basis_vec(2, 1)).unwrap();
        assert!(rep.pass);
    }

    #[test]
    fn nijenhuis_examples() {
        let a2 = fixtures::a2();
        assert!(
            is_nijenhuis(&a2, &fixtures::r_a(), &basis_vec(2, 0))
                .unwrap()
                .pass
        );
        assert!(
            is_nijenhuis(&a2, &fixtures::r_b(), &basis_vec(2, 0))
                .unwrap()
                .pass
        );
        // e2 fails membership on (A2, r_b)
        let rep = is_nijenhuis(&a2, &fixtures::r_b(), &basis_vec(2, 1)).unwrap();
        assert!(!rep.pass);
        assert!(rep
            .failures
            .iter()
            .any(|f| f.condition.contains("subcomplex")));
        // e2 on (B2, e2⊗e2) passes, e1 fails the tensor condition
        let b2 = fixtures::b2();
        let r = fixtures::r_b2();
        assert!(is_nijenhuis(&b2, &r, &basis_vec(2, 1)).unwrap().pass);
        let rep = is_nijenhuis(&b2, &r, &basis_vec(2, 0)).unwrap();
        assert!(!rep.pass);
    }

    #[test]
    fn trivial_deformations_on_fixtures() {
        let a2 = fixtures::a2();
        // x = e1 gives r_t = r on both r_a and r_b
        for r in [fixtures::r_a(), fixtures::r_b()] {
            let rt = trivial_deformation(&a2, &r, &basis_vec(2, 0)).unwrap();
            assert_eq!(rt.coeff(0), Some(&r));
            assert!(rt.coeff(1).is_none(), "⟦r, e1⟧ = 0 so r_t = r");
        }
        // x = 0 gives r_t = r anywhere
        let rt = trivial_deformation(&a2, &fixtures::r_b(), &zero_vec(2)).unwrap();
        assert_eq!(rt.coeff(0), Some(&fixtures::r_b()));
        assert!(rt.coeff(1).is_none());
        // non-Nijenhuis input is rejected with the failing condition
        assert!(matches!(
            trivial_deformation(&a2, &fixtures::r_b(), &basis_vec(2, 1)),
            Err(Error::Precondition(_))
        ));
        // b2 with x = e2: still r_t = r (δ(e2) = 0 there)
        let rt = trivial_deformation(&fixtures::b2(), &fixtures::r_b2(), &basis_vec(2, 1)).unwrap();
        assert!(rt.coeff(1).is_none());
    }

    #[test]
    fn scan_finds_the_axis_elements() {
        let a2 = fixtures::a2();
        let found = scan_nijenhuis(&a2, &fixtures::r_b()).unwrap();
        // ±e1 pass; anything involving e2 fails membership
        assert!(found.contains(&vec![rat(1), rat(0)]));
        assert!(found.contains(&vec![rat(-1), rat(0)]));
        assert!(found.iter().all(|v| v[1].is_zero()));
    }
}
