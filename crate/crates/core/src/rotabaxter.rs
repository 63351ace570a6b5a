//! Relative Rota-Baxter operators on Lie algebras: the graded Lie algebra on
//! `⊕_k Hom(Λ^k V, g)` whose Maurer-Cartan elements are exactly the
//! operators, plus the induced pre-Lie structure and the coboundary of an
//! operator.
//!
//! Degree convention: an element of `Hom(Λ^k V, g)` has graded degree `k`,
//! so linear maps `V → g` sit in degree 1 and the Maurer-Cartan equation
//! (with zero differential) reads `⟦T,T⟧ = 0`.

use crate::exactla::{
    basis_vec, rat, shuffles, sort_with_sign, vec_axpy, vec_is_zero, vec_scale, vec_sub,
    wedge_enumerate, wedge_position, zero_vec, Matrix, Rat,
};
use crate::prelie::{
    fmt_vec, verify_lie_representation, zero_cube, LieAlgebra, LieRepresentation, PreLieAlgebra,
};
use crate::report::{failure_at, Error, Report};

/// Element of `Hom(Λ^k V, g)`: antisymmetric by construction, only strictly
/// increasing indices are stored. Arities above `dim V` are the zero space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapCochain {
    pub arity: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    /// Indexed by `wedge_position(source_dim, wedge)`; each entry a g-vector.
    coeffs: Vec<Vec<Rat>>,
}

impl MapCochain {
    pub fn zero(arity: usize, source_dim: usize, target_dim: usize) -> Self {
        let wedges = crate::exactla::binomial(source_dim, arity);
        MapCochain {
            arity,
            source_dim,
            target_dim,
            coeffs: vec![zero_vec(target_dim); wedges],
        }
    }

    /// Arity-0 cochain: a constant vector of g.
    pub fn constant(source_dim: usize, value: Vec<Rat>) -> Self {
        let target_dim = value.len();
        MapCochain {
            arity: 0,
            source_dim,
            target_dim,
            coeffs: vec![value],
        }
    }

    /// Arity-1 cochain from the matrix of a linear map V → g.
    pub fn from_matrix(m: &Matrix) -> Self {
        let mut c = MapCochain::zero(1, m.cols(), m.rows());
        for j in 0..m.cols() {
            c.coeffs[j] = m.column(j);
        }
        c
    }

    /// Matrix of an arity-1 cochain.
    pub fn to_matrix(&self) -> Matrix {
        assert_eq!(self.arity, 1);
        Matrix::from_cols(self.target_dim, self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|v| vec_is_zero(v))
    }

    pub fn get(&self, wedge: &[usize]) -> &Vec<Rat> {
        &self.coeffs[wedge_position(self.source_dim, wedge)]
    }

    pub fn set(&mut self, wedge: &[usize], value: Vec<Rat>) {
        let pos = wedge_position(self.source_dim, wedge);
        self.coeffs[pos] = value;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.arity, self.source_dim, self.target_dim),
            (other.arity, other.source_dim, other.target_dim)
        );
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            vec_axpy(a, &rat(1), b);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.coeffs.iter_mut() {
            *v = vec_scale(&rat(-1), v);
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = self.clone();
        for v in out.coeffs.iter_mut() {
            *v = vec_scale(c, v);
        }
        out
    }

    /// Evaluate on basis arguments, sorting with sign; repeats give zero.
    pub fn eval_basis(&self, args: &[usize]) -> Vec<Rat> {
        debug_assert_eq!(args.len(), self.arity);
        if self.coeffs.is_empty() {
            return zero_vec(self.target_dim);
        }
        let mut sorted = args.to_vec();
        match sort_with_sign(&mut sorted) {
            None => zero_vec(self.target_dim),
            Some(sign) => {
                let v = self.get(&sorted);
                if sign > 0 {
                    v.clone()
                } else {
                    vec_scale(&rat(-1), v)
                }
            }
        }
    }

    /// Evaluate with a general V-vector in the first slot.
    pub fn eval_first_general(&self, first: &[Rat], rest: &[usize]) -> Vec<Rat> {
        let mut out = zero_vec(self.target_dim);
        for (s, c) in first.iter().enumerate() {
            if c == &rat(0) {
                continue;
            }
            let mut args = Vec::with_capacity(rest.len() + 1);
            args.push(s);
            args.extend_from_slice(rest);
            vec_axpy(&mut out, c, &self.eval_basis(&args));
        }
        out
    }
}

/// Ambient data for relative Rota-Baxter operators: a Lie algebra g and a
/// representation (V; ρ). Validated at construction.
#[derive(Clone, Debug)]
pub struct RBContext {
    lie: LieAlgebra,
    rep: LieRepresentation,
}

impl RBContext {
    pub fn new(lie: LieAlgebra, rep: LieRepresentation) -> Result<Self, Error> {
        let report = verify_lie_representation(&lie, &rep)?;
        if !report.pass {
            return Err(Error::precondition(report));
        }
        Ok(RBContext { lie, rep })
    }

    /// The context (g^c, L*) on g* attached to a pre-Lie algebra; this is
    /// where s-matrices live as Rota-Baxter operators.
    pub fn from_prelie_dual(a: &PreLieAlgebra) -> Self {
        RBContext::new(a.sub_adjacent(), a.left_mult_dual_rep())
            .expect("L* is a representation of the sub-adjacent algebra")
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn rep(&self) -> &LieRepresentation {
        &self.rep
    }

    pub fn source_dim(&self) -> usize {
        self.rep.space_dim
    }

    pub fn target_dim(&self) -> usize {
        self.lie.dim()
    }
}

/// The graded bracket on `⊕_k Hom(Λ^k V, g)`:
///
/// ```text
/// ⟦P,Q⟧(u_1,…,u_{n+m}) =
///     Σ_{σ ∈ Sh(m,1,n−1)} (−1)^σ P(ρ(Q(u_σ(1..m))) u_σ(m+1), u_σ(m+2..m+n))
///   − (−1)^{nm} Σ_{σ ∈ Sh(n,1,m−1)} (−1)^σ Q(ρ(P(u_σ(1..n))) u_σ(n+1), u_σ(n+2..n+m))
///   + (−1)^{nm} Σ_{σ ∈ Sh(n,m)} (−1)^σ [P(u_σ(1..n)), Q(u_σ(n+1..n+m))]
/// ```
///
/// with `n = |P|`, `m = |Q|`, shuffles increasing within each block, and
/// signs by inversion count.
pub fn graded_bracket(
    ctx: &RBContext,
    p: &MapCochain,
    q: &MapCochain,
) -> Result<MapCochain, Error> {
    let (m_v, n_g) = (ctx.source_dim(), ctx.target_dim());
    if p.source_dim != m_v || p.target_dim != n_g || q.source_dim != m_v || q.target_dim != n_g {
        return Err(Error::input("cochain dimensions must match the context"));
    }
    let pn = p.arity;
    let qm = q.arity;
    let total = pn + qm;
    let mut out = MapCochain::zero(total, m_v, n_g);
    if out.coeffs.is_empty() {
        return Ok(out);
    }
    let sign_nm = if (pn * qm) % 2 == 0 { rat(1) } else { rat(-1) };
    for u in wedge_enumerate(m_v, total) {
        let us = u.indices();
        let mut val = zero_vec(n_g);
        if pn >= 1 {
            for (word, sign) in shuffles(&[qm, 1, pn - 1]) {
                let q_args: Vec<usize> = word[..qm].iter().map(|&w| us[w]).collect();
                let qv = q.eval_basis(&q_args);
                let w_vec = ctx.rep.apply(&qv, &basis_vec(m_v, us[word[qm]]));
                let rest: Vec<usize> = word[qm + 1..].iter().map(|&w| us[w]).collect();
                let pv = p.eval_first_general(&w_vec, &rest);
                vec_axpy(&mut val, &rat(sign as i64), &pv);
            }
        }
        if qm >= 1 {
            for (word, sign) in shuffles(&[pn, 1, qm - 1]) {
                let p_args: Vec<usize> = word[..pn].iter().map(|&w| us[w]).collect();
                let pv = p.eval_basis(&p_args);
                let w_vec = ctx.rep.apply(&pv, &basis_vec(m_v, us[word[pn]]));
                let rest: Vec<usize> = word[pn + 1..].iter().map(|&w| us[w]).collect();
                let qv = q.eval_first_general(&w_vec, &rest);
                let c = -&sign_nm * rat(sign as i64);
                vec_axpy(&mut val, &c, &qv);
            }
        }
        for (word, sign) in shuffles(&[pn, qm]) {
            let p_args: Vec<usize> = word[..pn].iter().map(|&w| us[w]).collect();
            let q_args: Vec<usize> = word[pn..].iter().map(|&w| us[w]).collect();
            let br = ctx
                .lie
                .bracket(&p.eval_basis(&p_args), &q.eval_basis(&q_args));
            let c = &sign_nm * rat(sign as i64);
            vec_axpy(&mut val, &c, &br);
        }
        out.set(us, val);
    }
    Ok(out)
}

fn check_operator_shape(ctx: &RBContext, t: &Matrix) -> Result<(), Error> {
    if t.rows() != ctx.target_dim() || t.cols() != ctx.source_dim() {
        return Err(Error::input(format!(
            "operator must be a {}x{} matrix (target x source)",
            ctx.target_dim(),
            ctx.source_dim()
        )));
    }
    Ok(())
}

/// Pass iff `[Tu,Tv] = T(ρ(Tu)v − ρ(Tv)u)` on all basis pairs of V. Also
/// cross-checks the Maurer-Cartan route `⟦T,T⟧ = 0`; the two must agree.
pub fn is_relative_rb(ctx: &RBContext, t: &Matrix) -> Result<Report, Error> {
    check_operator_shape(ctx, t)?;
    let m_v = ctx.source_dim();
    let mut report = Report::passing("relative Rota-Baxter identity");
    'outer: for i in 0..m_v {
        for j in i + 1..m_v {
            let tu = t.column(i);
            let tv = t.column(j);
            let lhs = ctx.lie.bracket(&tu, &tv);
            let inner = vec_sub(
                &ctx.rep.apply(&tu, &basis_vec(m_v, j)),
                &ctx.rep.apply(&tv, &basis_vec(m_v, i)),
            );
            let rhs = t.mul_vec(&inner);
            if lhs != rhs {
                report.record(failure_at(
                    "[Tu,Tv] = T(rho(Tu)v - rho(Tv)u)",
                    &[i, j],
                    fmt_vec(&lhs),
                    fmt_vec(&rhs),
                ));
                break 'outer;
            }
        }
    }
    let t_cochain = MapCochain::from_matrix(t);
    let mc = graded_bracket(ctx, &t_cochain, &t_cochain)?;
    assert_eq!(
        report.pass,
        mc.is_zero(),
        "Maurer-Cartan route disagrees with the defining identity"
    );
    Ok(report)
}

/// Pre-Lie product `u ·_T v = ρ(Tu)(v)` on V induced by a relative
/// Rota-Baxter operator. Also asserts that T is a Lie algebra homomorphism
/// from the sub-adjacent bracket to g.
pub fn induced_prelie(ctx: &RBContext, t: &Matrix) -> Result<PreLieAlgebra, Error> {
    let rb = is_relative_rb(ctx, t)?;
    if !rb.pass {
        return Err(Error::precondition(rb));
    }
    let m_v = ctx.source_dim();
    let mut cube = zero_cube(m_v);
    for i in 0..m_v {
        let tu = t.column(i);
        for j in 0..m_v {
            cube[i][j] = ctx.rep.apply(&tu, &basis_vec(m_v, j));
        }
    }
    let algebra = PreLieAlgebra::new(cube)?;
    let sub = algebra.sub_adjacent();
    for i in 0..m_v {
        for j in 0..m_v {
            let lhs = t.mul_vec(&sub.bracket_basis(i, j));
            let rhs = ctx.lie.bracket(&t.column(i), &t.column(j));
            assert_eq!(lhs, rhs, "T must intertwine [.,.]^T with the g-bracket");
        }
    }
    Ok(algebra)
}

/// The representation `ϱ(u)(x) = [Tu, x] + T ρ(x)(u)` of the sub-adjacent
/// algebra `(V, [·,·]^T)` on g, evaluated at `u`. The representation
/// property is asserted on all basis pairs.
pub fn rb_representation(ctx: &RBContext, t: &Matrix, u: &[Rat]) -> Result<Matrix, Error> {
    let rb = is_relative_rb(ctx, t)?;
    if !rb.pass {
        return Err(Error::precondition(rb));
    }
    if u.len() != ctx.source_dim() {
        return Err(Error::input(
            "vector length must match the source dimension",
        ));
    }
    let (m_v, n_g) = (ctx.source_dim(), ctx.target_dim());
    let varrho = |w: &[Rat]| -> Matrix {
        let tw = t.mul_vec(w);
        let mut m = Matrix::zeros(n_g, n_g);
        for x in 0..n_g {
            let mut col = ctx.lie.bracket(&tw, &basis_vec(n_g, x));
            let rho_x_u = ctx.rep.apply(&basis_vec(n_g, x), w);
            vec_axpy(&mut col, &rat(1), &t.mul_vec(&rho_x_u));
            for k in 0..n_g {
                m[(k, x)] = col[k].clone();
            }
        }
        m
    };
    // ϱ([u,v]^T) = [ϱ(u), ϱ(v)] on basis pairs
    let induced = induced_prelie(ctx, t)?;
    let sub = induced.sub_adjacent();
    for i in 0..m_v {
        for j in 0..m_v {
            let lhs = {
                let br = sub.bracket_basis(i, j);
                let mut m = Matrix::zeros(n_g, n_g);
                for (k, c) in br.iter().enumerate() {
                    if c != &rat(0) {
                        m = &m + &varrho(&basis_vec(m_v, k)).scale(c);
                    }
                }
                m
            };
            let (ri, rj) = (varrho(&basis_vec(m_v, i)), varrho(&basis_vec(m_v, j)));
            let rhs = &(&ri * &rj) - &(&rj * &ri);
            assert_eq!(lhs, rhs, "varrho must represent the sub-adjacent bracket");
        }
    }
    Ok(varrho(u))
}

/// Chevalley-Eilenberg coboundary of a relative Rota-Baxter operator:
///
/// ```text
/// δf(u_1,…,u_{k+1}) =  Σ_i (−1)^{i+1} [Tu_i, f(…ˆu_i…)]
///                    + Σ_i (−1)^{i+1} T ρ(f(…ˆu_i…))(u_i)
///                    + Σ_{i<j} (−1)^{i+j} f(ρ(Tu_i)u_j − ρ(Tu_j)u_i, …ˆu_iˆu_j…)
/// ```
///
/// Both this formula and `(−1)^k ⟦T,f⟧` are computed and must agree; the
/// direct value is returned.
pub fn rb_coboundary(ctx: &RBContext, t: &Matrix, f: &MapCochain) -> Result<MapCochain, Error> {
    let rb = is_relative_rb(ctx, t)?;
    if !rb.pass {
        return Err(Error::precondition(rb));
    }
    if f.source_dim != ctx.source_dim() || f.target_dim != ctx.target_dim() {
        return Err(Error::input("cochain dimensions must match the context"));
    }
    let m_v = ctx.source_dim();
    let k = f.arity;
    let mut out = MapCochain::zero(k + 1, m_v, ctx.target_dim());
    for u in wedge_enumerate(m_v, k + 1) {
        let us = u.indices();
        let mut val = zero_vec(ctx.target_dim());
        for (pos, &ui) in us.iter().enumerate() {
            let sign = if pos % 2 == 0 { rat(1) } else { rat(-1) };
            let rest: Vec<usize> = us
                .iter()
                .enumerate()
                .filter(|(q, _)| *q != pos)
                .map(|(_, &v)| v)
                .collect();
            let fv = f.eval_basis(&rest);
            vec_axpy(&mut val, &sign, &ctx.lie.bracket(&t.column(ui), &fv));
            let rho_f_u = ctx.rep.apply(&fv, &basis_vec(m_v, ui));
            vec_axpy(&mut val, &sign, &t.mul_vec(&rho_f_u));
        }
        for pi in 0..us.len() {
            for pj in pi + 1..us.len() {
                // 1-based (−1)^{i+j}
                let sign = if (pi + pj) % 2 == 0 { rat(1) } else { rat(-1) };
                let first = vec_sub(
                    &ctx.rep.apply(&t.column(us[pi]), &basis_vec(m_v, us[pj])),
                    &ctx.rep.apply(&t.column(us[pj]), &basis_vec(m_v, us[pi])),
                );
                let rest: Vec<usize> = us
                    .iter()
                    .enumerate()
                    .filter(|(q, _)| *q != pi && *q != pj)
                    .map(|(_, &v)| v)
                    .collect();
                vec_axpy(&mut val, &sign, &f.eval_first_general(&first, &rest));
            }
        }
        out.set(us, val);
    }
    // cross-check against the graded-bracket route
    let t_cochain = MapCochain::from_matrix(t);
    let mut bracket_route = graded_bracket(ctx, &t_cochain, f)?;
    if k % 2 == 1 {
        bracket_route = bracket_route.neg();
    }
    assert_eq!(out, bracket_route, "δ_RB must equal (−1)^k ⟦T, f⟧");
    Ok(out)
}

/// Homomorphism of relative Rota-Baxter operators from T2 to T1: a pair
/// (φ, ψ) with φ a Lie algebra endomorphism of g, `T1∘ψ = φ∘T2` and
/// `ψ(ρ(x)v) = ρ(φx)ψ(v)`.
pub fn is_rb_homomorphism(
    ctx: &RBContext,
    t1: &Matrix,
    t2: &Matrix,
    phi: &Matrix,
    psi: &Matrix,
) -> Result<Report, Error> {
    check_operator_shape(ctx, t1)?;
    check_operator_shape(ctx, t2)?;
    let (m_v, n_g) = (ctx.source_dim(), ctx.target_dim());
    if phi.rows() != n_g || phi.cols() != n_g || psi.rows() != m_v || psi.cols() != m_v {
        return Err(Error::input("phi must be n x n and psi m x m"));
    }
    let mut report = Report::passing("relative Rota-Baxter operator homomorphism");
    let lhs = t1 * psi;
    let rhs = phi * t2;
    if lhs != rhs {
        report.record(failure_at(
            "T1 . psi = phi . T2",
            &[],
            format!("{lhs:?}"),
            format!("{rhs:?}"),
        ));
    }
    'inter: for x in 0..n_g {
        let rho_phi_x = ctx.rep.matrix_of(&phi.column(x));
        let lhs = psi * &ctx.rep.rho[x];
        let rhs = &rho_phi_x * psi;
        if lhs != rhs {
            report.record(failure_at(
                "psi(rho(x)v) = rho(phi x) psi(v)",
                &[x],
                format!("{lhs:?}"),
                format!("{rhs:?}"),
            ));
            break 'inter;
        }
    }
    'hom: for i in 0..n_g {
        for j in i + 1..n_g {
            let lhs = phi.mul_vec(&ctx.lie.bracket_basis(i, j));
            let rhs = ctx.lie.bracket(&phi.column(i), &phi.column(j));
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
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::smatrix::SymTensor2;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_cochain(rng: &mut ChaCha8Rng, arity: usize, m: usize, n: usize) -> MapCochain {
        let mut c = MapCochain::zero(arity, m, n);
        for w in wedge_enumerate(m, arity) {
            let v: Vec<Rat> = (0..n).map(|_| rat(rng.gen_range(-2..=2))).collect();
            c.set(w.indices(), v);
        }
        c
    }

    fn contexts() -> Vec<RBContext> {
        vec![
            RBContext::from_prelie_dual(&fixtures::a2()),
            RBContext::from_prelie_dual(&fixtures::b2()),
            RBContext::from_prelie_dual(&fixtures::n3()),
            RBContext::new(
                fixtures::b2().sub_adjacent(),
                fixtures::b2().sub_adjacent().adjoint_rep(),
            )
            .unwrap(),
        ]
    }

    #[test]
    fn bracket_with_zero_is_zero() {
        let ctx = RBContext::from_prelie_dual(&fixtures::a2());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let q = random_cochain(&mut rng, 1, 2, 2);
        let z = MapCochain::zero(1, 2, 2);
        assert!(graded_bracket(&ctx, &z, &q).unwrap().is_zero());
    }

    #[test]
    fn bracket_vanishes_for_abelian_trivial_context() {
        let ctx = RBContext::new(LieAlgebra::abelian(2), LieRepresentation::zero(2, 2)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for (ap, aq) in [(0, 1), (1, 1), (1, 2), (2, 1)] {
            let p = random_cochain(&mut rng, ap, 2, 2);
            let q = random_cochain(&mut rng, aq, 2, 2);
            assert!(graded_bracket(&ctx, &p, &q).unwrap().is_zero());
        }
    }

    #[test]
    fn graded_skew_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for ctx in contexts() {
            let m = ctx.source_dim();
            for _ in 0..10 {
                let ap = rng.gen_range(0..=2.min(m));
                let aq = rng.gen_range(0..=2.min(m));
                let p = random_cochain(&mut rng, ap, m, ctx.target_dim());
                let q = random_cochain(&mut rng, aq, m, ctx.target_dim());
                let pq = graded_bracket(&ctx, &p, &q).unwrap();
                let qp = graded_bracket(&ctx, &q, &p).unwrap();
                let expected = if (ap * aq) % 2 == 0 { qp.neg() } else { qp };
                assert_eq!(pq, expected, "⟦P,Q⟧ = −(−1)^{{|P||Q|}}⟦Q,P⟧ failed");
            }
        }
    }

    #[test]
    fn graded_jacobi() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for ctx in contexts() {
            let m = ctx.source_dim();
            for _ in 0..8 {
                let arities = [
                    rng.gen_range(0..=2.min(m)),
                    rng.gen_range(0..=2.min(m)),
                    rng.gen_range(0..=2.min(m)),
                ];
                let p = random_cochain(&mut rng, arities[0], m, ctx.target_dim());
                let q = random_cochain(&mut rng, arities[1], m, ctx.target_dim());
                let r = random_cochain(&mut rng, arities[2], m, ctx.target_dim());
                let term =
                    |a: &MapCochain, b: &MapCochain, c: &MapCochain, sa: usize, sc: usize| {
                        let inner = graded_bracket(&ctx, b, c).unwrap();
                        let outer = graded_bracket(&ctx, a, &inner).unwrap();
                        if (sa * sc) % 2 == 0 {
                            outer
                        } else {
                            outer.neg()
                        }
                    };
                // (−1)^{|P||R|}⟦P,⟦Q,R⟧⟧ + (−1)^{|Q||P|}⟦Q,⟦R,P⟧⟧ + (−1)^{|R||Q|}⟦R,⟦P,Q⟧⟧ = 0
                let total = term(&p, &q, &r, arities[0], arities[2])
                    .add(&term(&q, &r, &p, arities[1], arities[0]))
                    .add(&term(&r, &p, &q, arities[2], arities[1]));
                assert!(
                    total.is_zero(),
                    "graded Jacobi failed at arities {arities:?}"
                );
            }
        }
    }

    #[test]
    fn relative_rb_examples() {
        // T = 0 always passes
        let ctx = RBContext::from_prelie_dual(&fixtures::a2());
        assert!(is_relative_rb(&ctx, &Matrix::zeros(2, 2)).unwrap().pass);
        // abelian algebra with zero representation: every T passes
        let ab = RBContext::new(LieAlgebra::abelian(2), LieRepresentation::zero(2, 2)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let t = Matrix::new(2, 2, (0..4).map(|_| rat(rng.gen_range(-2..=2))).collect());
        assert!(is_relative_rb(&ab, &t).unwrap().pass);
        // r_b sharp is an operator for (A2^c, L*), r_c sharp is not
        assert!(is_relative_rb(&ctx, &fixtures::r_b().sharp()).unwrap().pass);
        assert!(!is_relative_rb(&ctx, &fixtures::r_c().sharp()).unwrap().pass);
    }

    #[test]
    fn induced_prelie_on_a2_dual() {
        let ctx = RBContext::from_prelie_dual(&fixtures::a2());
        let t = fixtures::r_b().sharp();
        let v = induced_prelie(&ctx, &t).unwrap();
        // u ·_T v = L*_{T u} v: the only nonzero basis product is
        // e1*·e1* = L*_{e2} e1* = −e2*
        assert_eq!(v.product_basis(0, 0), vec![rat(0), rat(-1)]);
        assert!(vec_is_zero(&v.product_basis(0, 1)));
        assert!(vec_is_zero(&v.product_basis(1, 0)));
        assert!(vec_is_zero(&v.product_basis(1, 1)));
        // this is the ∗-product attached to r_b; both share the bracket route
        let star = SymTensor2::star_cube(&fixtures::a2(), &fixtures::r_b());
        assert_eq!(v.cube(), &star);
        // zero operator induces the zero product
        let z = induced_prelie(&ctx, &Matrix::zeros(2, 2)).unwrap();
        assert!(z.cube().iter().flatten().all(|v| vec_is_zero(v)));
        // rejected operator comes back with the failing report
        assert!(matches!(
            induced_prelie(&ctx, &fixtures::r_c().sharp()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn rb_representation_on_a2_dual() {
        let ctx = RBContext::from_prelie_dual(&fixtures::a2());
        let t = fixtures::r_b().sharp();
        // ϱ(e1*): x ↦ [T e1*, x] + T(L*_x e1*); bracket abelian, so only
        // x = e2 contributes T(−e2*) = −e1
        let m = rb_representation(&ctx, &t, &basis_vec(2, 0)).unwrap();
        assert_eq!(m.mul_vec(&basis_vec(2, 0)), zero_vec(2));
        assert_eq!(m.mul_vec(&basis_vec(2, 1)), vec![rat(-1), rat(0)]);
        // u = 0 gives the zero matrix
        assert!(rb_representation(&ctx, &t, &zero_vec(2)).unwrap().is_zero());
        // abelian trivial context with T = 0: ϱ = 0
        let ab = RBContext::new(LieAlgebra::abelian(2), LieRepresentation::zero(2, 2)).unwrap();
        assert!(
            rb_representation(&ab, &Matrix::zeros(2, 2), &basis_vec(2, 1))
                .unwrap()
                .is_zero()
        );
    }

    #[test]
    fn rb_coboundary_squares_to_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for (a, r) in [
            (fixtures::a2(), fixtures::r_b()),
            (fixtures::b2(), fixtures::r_b2()),
            (fixtures::n3(), fixtures::r_n3()),
        ] {
            let ctx = RBContext::from_prelie_dual(&a);
            let t = r.sharp();
            for arity in 0..=2.min(ctx.source_dim()) {
                let f = random_cochain(&mut rng, arity, ctx.source_dim(), ctx.target_dim());
                let d1 = rb_coboundary(&ctx, &t, &f).unwrap();
                let d2 = rb_coboundary(&ctx, &t, &d1).unwrap();
                assert!(d2.is_zero(), "δ² ≠ 0 at arity {arity}");
            }
        }
        // zero cochain maps to zero
        let ctx = RBContext::from_prelie_dual(&fixtures::a2());
        let z = MapCochain::zero(1, 2, 2);
        assert!(rb_coboundary(&ctx, &fixtures::r_b().sharp(), &z)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn rb_coboundary_vanishes_on_abelian_trivial_context() {
        let ab = RBContext::new(LieAlgebra::abelian(3), LieRepresentation::zero(3, 3)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let t = Matrix::new(3, 3, (0..9).map(|_| rat(rng.gen_range(-2..=2))).collect());
        for arity in 0..=2 {
            let f = random_cochain(&mut rng, arity, 3, 3);
            assert!(rb_coboundary(&ab, &t, &f).unwrap().is_zero());
        }
    }

    #[test]
    fn rb_homomorphism_examples() {
        let ctx = RBContext::from_prelie_dual(&fixtures::a2());
        let t = fixtures::r_b().sharp();
        let id = Matrix::identity(2);
        assert!(is_rb_homomorphism(&ctx, &t, &t, &id, &id).unwrap().pass);
        // zero operators with any intertwining pair: identity works
        let z = Matrix::zeros(2, 2);
        assert!(is_rb_homomorphism(&ctx, &z, &z, &id, &id).unwrap().pass);
        // a non-intertwining psi fails
        let mut bad = Matrix::identity(2);
        bad[(0, 1)] = rat(1);
        let rep = is_rb_homomorphism(&ctx, &t, &t, &id, &bad).unwrap();
        assert!(!rep.pass);
    }
}
