// closure sweep: cohomology_dims asserts subcomplex closure at every degree
fn main() {
    use prelie_core::deformation::{cohomology_dims, Complex};
    use prelie_core::exactla::rat;
    use prelie_core::fixtures::random_symmetric;
    use prelie_core::prelie::{verify_pre_lie, zero_cube, PreLieAlgebra};
    use prelie_core::smatrix::is_s_matrix;
    use rand::{Rng, SeedableRng};

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(991);
    let mut pairs = 0usize;
    let mut checked = std::collections::HashSet::new();
    for attempt in 0..6_000_000usize {
        if pairs >= 400 {
            break;
        }
        let n = if attempt % 2 == 0 { 2 } else { 3 };
        let mut c = zero_cube(n);
        for _ in 0..rng.gen_range(1..=5) {
            let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            c[i][j][k] = rat(rng.gen_range(-1..=1));
            if rng.gen_bool(0.4) {
                c[j][i][k] = c[i][j][k].clone();
            }
        }
        if !verify_pre_lie(&c).unwrap().pass {
            continue;
        }
        let a = PreLieAlgebra::new(c).unwrap();
        for _ in 0..60 {
            let r = random_symmetric(&mut rng, n);
            if r.is_zero() || !is_s_matrix(&a, &r).unwrap().pass {
                continue;
            }
            let key = format!("{:?}|{:?}", a.cube(), r.table());
            if !checked.insert(key) {
                continue;
            }
            // panics inside delta_matrix if closure fails at any degree
            let dims = cohomology_dims(&a, &r, n + 1, Complex::Subcomplex).unwrap();
            let full = cohomology_dims(&a, &r, n + 1, Complex::Full).unwrap();
            assert!(dims.iter().zip(&full).all(|(s, f)| s <= f));
            pairs += 1;
        }
    }
    println!("closure + dims held on {pairs} distinct (algebra, s-matrix) pairs");
}
