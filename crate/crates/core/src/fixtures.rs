//! Small hand-checked algebras and tensors used by the test suites, the CLI
//! examples and the Python smoke test.
//!
//! Naming: `z2` is the 2-dimensional abelian algebra, `a2` has the single
//! product `e2·e2 = e1`, `b2` is the non-commutative algebra with
//! `e1·e1 = e1`, `e1·e2 = e2`, and `n3`/`n4` are the truncated polynomial
//! algebras with `e_i·e_j = e_{i+j}`.

use crate::exactla::{basis_vec, rat, Rat};
use crate::prelie::{zero_cube, PreLieAlgebra};
use crate::smatrix::SymTensor2;

/// Abelian pre-Lie algebra of dimension 2: all products zero.
pub fn z2() -> PreLieAlgebra {
    PreLieAlgebra::new(zero_cube(2)).unwrap()
}

/// Dimension 2, `e2·e2 = e1`, all other basis products zero.
pub fn a2() -> PreLieAlgebra {
    let mut c = zero_cube(2);
    c[1][1] = basis_vec(2, 0);
    PreLieAlgebra::new(c).unwrap()
}

/// Dimension 2, non-commutative: `e1·e1 = e1`, `e1·e2 = e2`, else zero.
/// Sub-adjacent bracket `[e1,e2] = e2`.
pub fn b2() -> PreLieAlgebra {
    let mut c = zero_cube(2);
    c[0][0] = basis_vec(2, 0);
    c[0][1] = basis_vec(2, 1);
    PreLieAlgebra::new(c).unwrap()
}

/// Truncated polynomials of dimension n: `e_i·e_j = e_{i+j}` when
/// `i + j ≤ n` (1-based degrees), zero otherwise.
fn truncated(n: usize) -> PreLieAlgebra {
    let mut c = zero_cube(n);
    for i in 0..n {
        for j in 0..n {
            if i + j + 2 <= n {
                c[i][j] = basis_vec(n, i + j + 1);
            }
        }
    }
    PreLieAlgebra::new(c).unwrap()
}

pub fn n3() -> PreLieAlgebra {
    truncated(3)
}

pub fn n4() -> PreLieAlgebra {
    truncated(4)
}

fn sym(dim: usize, entries: &[(usize, usize, i64)]) -> SymTensor2 {
    let mut t = vec![vec![rat(0); dim]; dim];
    for &(i, j, v) in entries {
        t[i][j] = rat(v);
        t[j][i] = rat(v);
    }
    SymTensor2::new(t).unwrap()
}

/// `e1⊗e1` on a 2-dimensional space.
pub fn r_a() -> SymTensor2 {
    sym(2, &[(0, 0, 1)])
}

/// `e1⊗e2 + e2⊗e1` on a 2-dimensional space.
pub fn r_b() -> SymTensor2 {
    sym(2, &[(0, 1, 1)])
}

/// `e2⊗e2` on a 2-dimensional space.
pub fn r_c() -> SymTensor2 {
    sym(2, &[(1, 1, 1)])
}

/// Identity coefficient table of the given dimension.
pub fn r_identity(dim: usize) -> SymTensor2 {
    let entries: Vec<(usize, usize, i64)> = (0..dim).map(|i| (i, i, 1)).collect();
    sym(dim, &entries)
}

/// Invertible s-matrix on [`n3`]: `e1⊗e3 + e3⊗e1 + e2⊗e2`.
pub fn r_n3() -> SymTensor2 {
    sym(3, &[(0, 2, 1), (1, 1, 1)])
}

/// Degenerate s-matrix on [`b2`]: `e2⊗e2`.
pub fn r_b2() -> SymTensor2 {
    sym(2, &[(1, 1, 1)])
}

/// A small pool of (algebra, verified s-matrix) pairs covering dims 2–4.
pub fn s_matrix_pool() -> Vec<(PreLieAlgebra, SymTensor2)> {
    vec![
        (z2(), r_identity(2)),
        (a2(), r_a()),
        (a2(), r_b()),
        (b2(), r_b2()),
        (n3(), r_n3()),
        // antidiagonal analogue on n4: e1⊗e4 + e4⊗e1 + e2⊗e3 + e3⊗e2
        (n4(), sym(4, &[(0, 3, 1), (1, 2, 1)])),
    ]
}

/// Random symmetric tensor with entries in −2..=2 from the given rng.
pub fn random_symmetric<R: rand::Rng>(rng: &mut R, dim: usize) -> SymTensor2 {
    let mut t = vec![vec![rat(0); dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let v: Rat = rat(rng.gen_range(-2..=2));
            t[i][j] = v.clone();
            t[j][i] = v;
        }
    }
    SymTensor2::new(t).unwrap()
}
