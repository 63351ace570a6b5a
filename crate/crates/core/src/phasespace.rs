//! Phase spaces of Lie algebras on `g ⊕ g*` and their deformations.
//!
//! The ordered basis is the primal block first, dual block second; the
//! canonical pairing form is `ω_p(x+α, y+β) = ⟨α,y⟩ − ⟨x,β⟩`, i.e. the
//! block matrix `[[0, −I], [I, 0]]`. A phase space built from an s-matrix
//! carries the bracket
//!
//! ```text
//! [x+α, y+β]_p = [α,β]_r + L*_x β − L*_y α + L*_α y − L*_β x + [x,y]_g
//! ```
//!
//! with `⟨L*_α x, β⟩ = −⟨x, α·_r β⟩`. The same assembler accepts any
//! pre-Lie product on `g*`, which is how deformed phase spaces are formed.

use crate::deformation::{deformation_report, is_nijenhuis, trivial_deformation};
use crate::exactla::{basis_vec, rat, vec_axpy, vec_is_zero, zero_vec, Matrix, Rat};
use crate::prelie::{fmt_vec, verify_lie, zero_cube, Cube, LieAlgebra, PreLieAlgebra};
use crate::report::{failure_at, Error, Report};
use crate::smatrix::{dual_product_cubes, is_s_matrix, BilinearForm, SymTensor2, Symmetry};
use num_traits::Zero;

/// A candidate phase space: a bracket on `g ⊕ g*` with the canonical
/// pairing form. Invariants are checked by [`verify_phase_space`], not at
/// construction, so corrupted candidates can be represented and rejected.
#[derive(Clone, Debug)]
pub struct PhaseSpace {
    base: PreLieAlgebra,
    r: Option<SymTensor2>,
    bracket: Cube,
    omega: Matrix,
}

/// A bilinear operation `π: g* × g* → g*`, the correction term of a
/// deformed dual product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBilinearMap {
    pub dim: usize,
    /// `table[i][j]` = coordinates of `π(e_i*, e_j*)` in the dual basis.
    pub table: Cube,
}

impl DualBilinearMap {
    pub fn zero(dim: usize) -> Self {
        DualBilinearMap {
            dim,
            table: zero_cube(dim),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().flatten().all(|v| vec_is_zero(v))
    }
}

impl PhaseSpace {
    /// Wrap raw data without verification.
    pub fn from_raw(
        base: PreLieAlgebra,
        r: Option<SymTensor2>,
        bracket: Cube,
        omega: Matrix,
    ) -> Self {
        PhaseSpace {
            base,
            r,
            bracket,
            omega,
        }
    }

    pub fn base(&self) -> &PreLieAlgebra {
        &self.base
    }

    pub fn generating_tensor(&self) -> Option<&SymTensor2> {
        self.r.as_ref()
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn dim(&self) -> usize {
        2 * self.base.dim()
    }

    pub fn bracket_cube(&self) -> &Cube {
        &self.bracket
    }

    pub fn omega_matrix(&self) -> &Matrix {
        &self.omega
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        self.bracket[i][j].clone()
    }

    /// Replace one bracket entry (and its skew partner); test hook for
    /// corrupted inputs.
    pub fn with_corrupted_bracket(mut self, i: usize, j: usize, value: Vec<Rat>) -> Self {
        self.bracket[i][j] = value.clone();
        self.bracket[j][i] = value.iter().map(|c| -c).collect();
        self
    }

    /// Label a 0-based index in the 2n basis: `e3` or `e1*`.
    pub fn label(&self, idx: usize) -> String {
        let n = self.base_dim();
        if idx < n {
            format!("e{}", idx + 1)
        } else {
            format!("e{}*", idx - n + 1)
        }
    }
}

fn cube_apply(cube: &Cube, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    let n = cube.len();
    let mut out = zero_vec(n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            let c = xi * yj;
            if !c.is_zero() {
                vec_axpy(&mut out, &c, &cube[i][j]);
            }
        }
    }
    out
}

/// The canonical pairing matrix `[[0, −I], [I, 0]]` on `g ⊕ g*`.
fn canonical_omega(n: usize) -> Matrix {
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        m[(i, n + i)] = rat(-1);
        m[(n + i, i)] = rat(1);
    }
    m
}

/// Assemble the phase-space bracket from a pre-Lie product on `g*` given as
/// a structure cube (`dual_dot[i][j]` = coordinates of `e_i*·e_j*`).
pub fn assemble_phase_space(
    a: &PreLieAlgebra,
    dual_dot: &Cube,
    r: Option<SymTensor2>,
) -> PhaseSpace {
    let n = a.dim();
    let two_n = 2 * n;
    let lie = a.sub_adjacent();
    let mut bracket = vec![vec![zero_vec(two_n); two_n]; two_n];

    // primal block: [x, y]_g
    for i in 0..n {
        for j in 0..n {
            let v = lie.bracket_basis(i, j);
            for (k, c) in v.iter().enumerate() {
                bracket[i][j][k] = c.clone();
            }
        }
    }
    // dual block: [α, β] = α·β − β·α in the dual product
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                bracket[n + i][n + j][n + k] = &dual_dot[i][j][k] - &dual_dot[j][i][k];
            }
        }
    }
    // mixed block: [x, α] = L*_x α − L*_α x
    // ⟨L*_α x, β⟩ = −⟨x, α·β⟩ gives (L*_{e_j*} e_i)_k = −(e_j*·e_k*)_i
    for i in 0..n {
        let (lstar_i, _, _) = a.dual_operators(&basis_vec(n, i)).unwrap();
        for j in 0..n {
            let mut v = zero_vec(two_n);
            for k in 0..n {
                v[n + k] = lstar_i[(k, j)].clone(); // L*_{e_i} e_j* component
                v[k] = -dual_dot[j][k][i].clone(); // −L*_{e_j*} e_i component
            }
            for (k, c) in v.iter().enumerate() {
                bracket[i][n + j][k] = c.clone();
                bracket[n + j][i][k] = -c;
            }
        }
    }
    PhaseSpace {
        base: a.clone(),
        r,
        bracket,
        omega: canonical_omega(n),
    }
}

/// Phase space of `g^c` attached to an s-matrix: the assembler fed with the
/// dot product `·_r`. The construction is verified before returning, and
/// `ω_p` is asserted nondegenerate.
pub fn build_phase_space(a: &PreLieAlgebra, r: &SymTensor2) -> Result<PhaseSpace, Error> {
    let gate = is_s_matrix(a, r)?;
    if !gate.pass {
        return Err(Error::precondition(gate));
    }
    let dual = dual_product_cubes(a, r)?;
    let ps = assemble_phase_space(a, &dual.dot, Some(r.clone()));
    assert_eq!(
        ps.omega.rank(),
        ps.dim(),
        "canonical pairing must be nondegenerate"
    );
    let report = verify_phase_space(&ps);
    assert!(
        report.pass,
        "s-matrix phase space failed verification: {}",
        report.summary()
    );
    Ok(ps)
}

/// Full phase-space verification: Jacobi for the bracket, ω_p a 2-cocycle,
/// both blocks closed under the bracket, and both blocks Lagrangian
/// (ω_p vanishes on each block of dimension n).
pub fn verify_phase_space(ps: &PhaseSpace) -> Report {
    verify_phase_space_raw(ps.base_dim(), &ps.bracket, &ps.omega)
}

/// Verification on raw data: a 2n bracket cube with primal block size
/// `split` and a 2n × 2n pairing matrix. This is what exported files are
/// checked against when re-loaded.
pub fn verify_phase_space_raw(split: usize, bracket: &Cube, omega: &Matrix) -> Report {
    let n = split;
    let two_n = bracket.len();
    let label = |idx: usize| -> String {
        if idx < n {
            format!("e{}", idx + 1)
        } else {
            format!("e{}*", idx - n + 1)
        }
    };
    let mut report = Report::passing("phase space structure");
    if two_n != 2 * n || omega.rows() != two_n || omega.cols() != two_n {
        report.record(failure_at(
            "shape: bracket is 2n-dimensional and omega 2n x 2n",
            &[],
            format!(
                "bracket dim {two_n}, omega {}x{}",
                omega.rows(),
                omega.cols()
            ),
            format!("2n = {}", 2 * n),
        ));
        return report;
    }
    match verify_lie(bracket) {
        Ok(lie_report) => report.absorb("bracket", lie_report),
        Err(e) => {
            report.record(failure_at(
                "bracket shape",
                &[],
                e.to_string(),
                "2n x 2n x 2n".into(),
            ));
            return report;
        }
    }
    // ω_p is skew
    if &-&omega.transpose() != omega {
        report.record(failure_at(
            "omega is skew-symmetric",
            &[],
            format!("{omega:?}"),
            "skew".into(),
        ));
    }
    // 2-cocycle: ω([a,b],c) + ω([b,c],a) + ω([c,a],b) = 0
    let omega_of = |x: &[Rat], y: &[Rat]| -> Rat {
        let mut acc = rat(0);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                acc += xi * &omega[(i, j)] * yj;
            }
        }
        acc
    };
    'cocycle: for a in 0..two_n {
        for b in a + 1..two_n {
            for c in b + 1..two_n {
                let (ea, eb, ec) = (
                    basis_vec(two_n, a),
                    basis_vec(two_n, b),
                    basis_vec(two_n, c),
                );
                let total = omega_of(&bracket[a][b], &ec)
                    + omega_of(&bracket[b][c], &ea)
                    + omega_of(&bracket[c][a], &eb);
                if !total.is_zero() {
                    report.record(failure_at(
                        &format!(
                            "omega 2-cocycle at ({}, {}, {})",
                            label(a),
                            label(b),
                            label(c)
                        ),
                        &[a, b, c],
                        total.to_string(),
                        "0".to_string(),
                    ));
                    break 'cocycle;
                }
            }
        }
    }
    // closure of the two blocks
    'closure: for i in 0..two_n {
        for j in 0..two_n {
            let same_block = (i < n) == (j < n);
            if !same_block {
                continue;
            }
            let v = &bracket[i][j];
            let leak = if i < n {
                v[n..].iter().any(|c| !c.is_zero())
            } else {
                v[..n].iter().any(|c| !c.is_zero())
            };
            if leak {
                report.record(failure_at(
                    &format!("block closure at ({}, {})", label(i), label(j)),
                    &[i, j],
                    fmt_vec(v),
                    "inside the block".to_string(),
                ));
                break 'closure;
            }
        }
    }
    // Lagrangian: ω vanishes on each block (dimensions are n by layout)
    for (lo, hi, name) in [(0, n, "primal"), (n, two_n, "dual")] {
        'lag: for i in lo..hi {
            for j in lo..hi {
                if !omega[(i, j)].is_zero() {
                    report.record(failure_at(
                        &format!("{name} block is isotropic"),
                        &[i, j],
                        omega[(i, j)].to_string(),
                        "0".to_string(),
                    ));
                    break 'lag;
                }
            }
        }
    }
    report
}

/// Compatible pre-Lie structure of a symplectic Lie algebra:
/// `ω(x·y, z) = −ω(y, [x,z])`, solved basis pair by basis pair through the
/// nondegeneracy of ω. The output verifies as pre-Lie and its sub-adjacent
/// bracket reproduces the input.
pub fn prelie_from_symplectic(
    f: &LieAlgebra,
    omega: &BilinearForm,
) -> Result<PreLieAlgebra, Error> {
    let n = f.dim();
    if omega.dim != n {
        return Err(Error::input("form dimension must match the algebra"));
    }
    if omega.symmetry != Symmetry::Skew {
        return Err(Error::input("a symplectic form must be skew"));
    }
    if !omega.is_nondegenerate() {
        return Err(Error::NotInvertible);
    }
    // 2-cocycle gate
    let mut gate = Report::passing("symplectic 2-cocycle");
    'cocycle: for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (ea, eb, ec) = (basis_vec(n, a), basis_vec(n, b), basis_vec(n, c));
                let total = omega.eval(&f.bracket_basis(a, b), &ec)
                    + omega.eval(&f.bracket_basis(b, c), &ea)
                    + omega.eval(&f.bracket_basis(c, a), &eb);
                if !total.is_zero() {
                    gate.record(failure_at(
                        "omega([x,y],z) + omega([y,z],x) + omega([z,x],y) = 0",
                        &[a, b, c],
                        total.to_string(),
                        "0".to_string(),
                    ));
                    break 'cocycle;
                }
            }
        }
    }
    if !gate.pass {
        return Err(Error::precondition(gate));
    }
    let wt = omega.matrix.transpose();
    let mut cube = zero_cube(n);
    for i in 0..n {
        for j in 0..n {
            // ω(e_i·e_j, e_z) = −ω(e_j, [e_i, e_z]) for every z
            let rhs: Vec<Rat> = (0..n)
                .map(|z| -omega.eval(&basis_vec(n, j), &f.bracket_basis(i, z)))
                .collect();
            cube[i][j] = wt.solve(&rhs).expect("omega is nondegenerate");
        }
    }
    let algebra = PreLieAlgebra::new(cube)?;
    assert_eq!(
        algebra.sub_adjacent().cube(),
        f.cube(),
        "compatible pre-Lie product must commutator back to the input bracket"
    );
    Ok(algebra)
}

/// The correction `π(α,β) = ad*_{κ♯α}β − R*_{κ♯β}α` a full deformation κ
/// induces on the dual product; exactly the dot-product table of κ, and
/// coefficientwise `α ·_{r+tκ} β = α ·_r β + t·π(α,β)` is asserted.
pub fn phase_deformation_pi(
    a: &PreLieAlgebra,
    r: &SymTensor2,
    kappa: &SymTensor2,
) -> Result<DualBilinearMap, Error> {
    let rep = deformation_report(a, r, kappa)?;
    if !rep.is_full_deformation {
        return Err(Error::precondition(Report::failing(
            "kappa generates a one-parameter deformation",
            failure_at(
                "⟦r,κ⟧ = 0 and ⟦κ,κ⟧ = 0",
                &[],
                "nonzero bracket".into(),
                "0".into(),
            ),
        )));
    }
    let pi = dual_product_cubes(a, kappa)?.dot;
    // the dot product is linear in the tensor: dot(r + κ) = dot(r) + dot(κ)
    let dot_r = dual_product_cubes(a, r)?.dot;
    let dot_sum = dual_product_cubes(a, &r.add(kappa))?.dot;
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let expect = crate::exactla::vec_add(&dot_r[i][j], &pi[i][j]);
            assert_eq!(
                dot_sum[i][j], expect,
                "deformed dual product must be the π-shift"
            );
        }
    }
    Ok(DualBilinearMap {
        dim: a.dim(),
        table: pi,
    })
}

/// Report of a deformed phase space: the bracket of `r + tκ` is affine in
/// t, and both the Jacobi identity and the ω_p-cocycle identity hold for
/// every coefficient of t.
pub struct PhaseDeformationReport {
    /// t¹ correction to the bracket structure constants on `g ⊕ g*`.
    pub linear: Cube,
    /// t² correction — identically zero since the bracket is affine in t.
    pub quadratic: Cube,
    pub report: Report,
}

/// Build the phase space of `r + tκ` with t formal and check its axioms
/// coefficientwise.
pub fn deform_phase_space(
    a: &PreLieAlgebra,
    r: &SymTensor2,
    kappa: &SymTensor2,
) -> Result<PhaseDeformationReport, Error> {
    let pi = phase_deformation_pi(a, r, kappa)?;
    let n = a.dim();
    let two_n = 2 * n;
    let base = build_phase_space(a, r)?;
    let b0 = base.bracket_cube().clone();
    let shifted = assemble_phase_space(a, &dual_product_cubes(a, &r.add(kappa))?.dot, None);
    let mut b1 = vec![vec![zero_vec(two_n); two_n]; two_n];
    for i in 0..two_n {
        for j in 0..two_n {
            b1[i][j] = crate::exactla::vec_sub(&shifted.bracket_cube()[i][j], &b0[i][j]);
        }
    }
    // affine in t: the double shift gives exactly twice the correction
    let double = assemble_phase_space(
        a,
        &dual_product_cubes(a, &r.add(&kappa.scale(&rat(2))))?.dot,
        None,
    );
    for i in 0..two_n {
        for j in 0..two_n {
            let twice = crate::exactla::vec_scale(&rat(2), &b1[i][j]);
            assert_eq!(
                crate::exactla::vec_sub(&double.bracket_cube()[i][j], &b0[i][j]),
                twice,
                "phase-space bracket must be affine in t"
            );
        }
    }

    let mut report = Report::passing("deformed phase space, coefficientwise in t");
    // Jacobi: coefficients t⁰, t¹, t² of Jac(B0 + tB1)
    let jac = |outer: &Cube, inner: &Cube, x: usize, y: usize, z: usize| -> Vec<Rat> {
        let mut v = cube_apply(outer, &basis_vec(two_n, x), &inner[y][z]);
        vec_axpy(
            &mut v,
            &rat(1),
            &cube_apply(outer, &basis_vec(two_n, y), &inner[z][x]),
        );
        vec_axpy(
            &mut v,
            &rat(1),
            &cube_apply(outer, &basis_vec(two_n, z), &inner[x][y]),
        );
        v
    };
    'jacobi: for x in 0..two_n {
        for y in x + 1..two_n {
            for z in y + 1..two_n {
                let t0 = jac(&b0, &b0, x, y, z);
                let t1 = crate::exactla::vec_add(&jac(&b0, &b1, x, y, z), &jac(&b1, &b0, x, y, z));
                let t2 = jac(&b1, &b1, x, y, z);
                for (deg, v) in [(0usize, &t0), (1, &t1), (2, &t2)] {
                    if !vec_is_zero(v) {
                        report.record(failure_at(
                            &format!("Jacobi coefficient of t^{deg}"),
                            &[x, y, z],
                            fmt_vec(v),
                            "0".to_string(),
                        ));
                        break 'jacobi;
                    }
                }
            }
        }
    }
    // ω_p-cocycle: linear in the bracket, so coefficients t⁰ and t¹
    let omega = base.omega_matrix();
    let omega_of = |x: &[Rat], y: &[Rat]| -> Rat {
        let mut acc = rat(0);
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                acc += xi * &omega[(i, j)] * yj;
            }
        }
        acc
    };
    'cocycle: for x in 0..two_n {
        for y in x + 1..two_n {
            for z in y + 1..two_n {
                for (deg, cube) in [(0usize, &b0), (1, &b1)] {
                    let total = omega_of(&cube[x][y], &basis_vec(two_n, z))
                        + omega_of(&cube[y][z], &basis_vec(two_n, x))
                        + omega_of(&cube[z][x], &basis_vec(two_n, y));
                    if !total.is_zero() {
                        report.record(failure_at(
                            &format!("omega cocycle coefficient of t^{deg}"),
                            &[x, y, z],
                            total.to_string(),
                            "0".to_string(),
                        ));
                        break 'cocycle;
                    }
                }
            }
        }
    }
    // the correction never touches the primal block
    for i in 0..n {
        for j in 0..n {
            assert!(
                vec_is_zero(&b1[i][j]),
                "deformation must not move the primal bracket"
            );
        }
    }
    let _ = pi;
    Ok(PhaseDeformationReport {
        linear: b1,
        quadratic: vec![vec![zero_vec(two_n); two_n]; two_n],
        report,
    })
}

/// Weak homomorphism of phase spaces: φ a Lie homomorphism between the
/// primal blocks, ϕᵀ one between the dual blocks, and the block map
/// φ ⊕ ϕᵀ a Lie homomorphism for the full brackets.
pub fn is_weak_phase_homomorphism(
    from: &PhaseSpace,
    to: &PhaseSpace,
    phi: &Matrix,
    varphi: &Matrix,
) -> Result<Report, Error> {
    let n = from.base_dim();
    if to.base_dim() != n {
        return Err(Error::input("phase spaces must share the base dimension"));
    }
    if phi.rows() != n || phi.cols() != n || varphi.rows() != n || varphi.cols() != n {
        return Err(Error::input("phi and varphi must be n x n"));
    }
    let two_n = 2 * n;
    let psi = varphi.transpose();
    // block map Φ = φ ⊕ ϕᵀ
    let mut block = Matrix::zeros(two_n, two_n);
    for i in 0..n {
        for j in 0..n {
            block[(i, j)] = phi[(i, j)].clone();
            block[(n + i, n + j)] = psi[(i, j)].clone();
        }
    }
    let mut report = Report::passing("weak homomorphism of phase spaces");
    let apply = |m: &Matrix, v: &[Rat]| m.mul_vec(v);
    // primal block homomorphism
    'primal: for i in 0..n {
        for j in i + 1..n {
            let lhs = apply(phi, &from.bracket[i][j][..n].to_vec());
            let rhs = cube_apply_block(&to.bracket, &phi.column(i), &phi.column(j), 0, n);
            if lhs != rhs {
                report.record(failure_at(
                    "phi preserves the primal bracket",
                    &[i, j],
                    fmt_vec(&lhs),
                    fmt_vec(&rhs),
                ));
                break 'primal;
            }
        }
    }
    // dual block homomorphism
    'dual: for i in 0..n {
        for j in i + 1..n {
            let lhs = apply(&psi, &from.bracket[n + i][n + j][n..].to_vec());
            let rhs = cube_apply_block(&to.bracket, &psi.column(i), &psi.column(j), n, two_n);
            if lhs != rhs {
                report.record(failure_at(
                    "varphi* preserves the dual bracket",
                    &[i, j],
                    fmt_vec(&lhs),
                    fmt_vec(&rhs),
                ));
                break 'dual;
            }
        }
    }
    // full block map
    'full: for i in 0..two_n {
        for j in i + 1..two_n {
            let lhs = block.mul_vec(&from.bracket[i][j]);
            let rhs = cube_apply(&to.bracket, &block.column(i), &block.column(j));
            if lhs != rhs {
                report.record(failure_at(
                    "phi + varphi* preserves the phase-space bracket",
                    &[i, j],
                    fmt_vec(&lhs),
                    fmt_vec(&rhs),
                ));
                break 'full;
            }
        }
    }
    Ok(report)
}

fn cube_apply_block(cube: &Cube, x: &[Rat], y: &[Rat], lo: usize, hi: usize) -> Vec<Rat> {
    // x, y live in the block coordinates lo..hi of the ambient cube
    let n = cube.len();
    let mut fx = zero_vec(n);
    let mut fy = zero_vec(n);
    for (p, c) in x.iter().enumerate() {
        fx[lo + p] = c.clone();
    }
    for (p, c) in y.iter().enumerate() {
        fy[lo + p] = c.clone();
    }
    cube_apply(cube, &fx, &fy)[lo..hi].to_vec()
}

/// Corollary correction for a Nijenhuis element:
/// `π(α,β) = ad*_{[r♯α,x]}β + ad*_{r♯(L*_xα)}β − R*_{[r♯β,x]}α − R*_{r♯(L*_xβ)}α`,
/// asserted equal to the π of the trivial deformation direction `⟦r,x⟧`.
pub fn nijenhuis_phase_deformation(
    a: &PreLieAlgebra,
    r: &SymTensor2,
    x: &[Rat],
) -> Result<DualBilinearMap, Error> {
    let nij = is_nijenhuis(a, r, x)?;
    if !nij.pass {
        return Err(Error::precondition(nij));
    }
    let n = a.dim();
    let lie = a.sub_adjacent();
    let sharp = r.sharp();
    let (lstar_x, _, _) = a.dual_operators(x)?;
    // v_i = [r♯ e_i*, x] + r♯(L*_x e_i*)
    let v: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut w = lie.bracket(&sharp.column(i), x);
            vec_axpy(
                &mut w,
                &rat(1),
                &sharp.mul_vec(&lstar_x.mul_vec(&basis_vec(n, i))),
            );
            w
        })
        .collect();
    let mut table = zero_cube(n);
    for i in 0..n {
        let (_, _, adstar_vi) = a.dual_operators(&v[i])?;
        for j in 0..n {
            let (_, rstar_vj, _) = a.dual_operators(&v[j])?;
            let mut val = adstar_vi.mul_vec(&basis_vec(n, j));
            vec_axpy(&mut val, &rat(-1), &rstar_vj.mul_vec(&basis_vec(n, i)));
            table[i][j] = val;
        }
    }
    let pi = DualBilinearMap { dim: n, table };
    // agreement with the trivial deformation direction
    let rt = trivial_deformation(a, r, x)?;
    let kappa = rt.coeff(1).cloned().unwrap_or_else(|| SymTensor2::zero(n));
    let direct = phase_deformation_pi(a, r, &kappa)?;
    assert_eq!(
        pi, direct,
        "corollary π must match the trivial deformation π"
    );
    Ok(pi)
}
