//! Cross-module invariants exercised on the whole fixture pool.

use prelie_core::deformation::{
    cohomology_dims, deformations_equivalent, is_weak_homomorphism, Complex, SCohomology,
};
use prelie_core::exactla::{basis_vec, rat, Matrix};
use prelie_core::files::PhaseSpaceFile;
use prelie_core::fixtures;
use prelie_core::phasespace::{
    build_phase_space, is_weak_phase_homomorphism, prelie_from_symplectic, verify_phase_space,
    verify_phase_space_raw,
};
use prelie_core::prelie::LieAlgebra;
use prelie_core::smatrix::{is_s_matrix, BilinearForm, SymTensor2, Symmetry};

#[test]
fn pool_pipeline_end_to_end() {
    for (a, r) in fixtures::s_matrix_pool() {
        assert!(is_s_matrix(&a, &r).unwrap().pass);
        // cohomology through the top nonzero degree; δ² = 0 is asserted
        // inside for both complexes
        let kmax = a.dim() + 1;
        let full = cohomology_dims(&a, &r, kmax, Complex::Full).unwrap();
        let tilde = cohomology_dims(&a, &r, kmax, Complex::Subcomplex).unwrap();
        assert_eq!(full.len(), kmax);
        assert_eq!(tilde.len(), kmax);
        // phase space, export, byte-identical re-import, re-verification
        let ps = build_phase_space(&a, &r).unwrap();
        assert!(verify_phase_space(&ps).pass);
        let exported = PhaseSpaceFile::from_phase_space(&ps).to_json();
        let parsed = PhaseSpaceFile::parse(&exported).unwrap();
        assert_eq!(parsed.to_json(), exported);
        assert!(
            verify_phase_space_raw(
                parsed.split,
                &parsed.to_bracket_cube().unwrap(),
                &parsed.to_omega_matrix().unwrap()
            )
            .pass
        );
        // symplectic round trip on the built space
        let lie = LieAlgebra::new(ps.bracket_cube().clone()).unwrap();
        let omega = BilinearForm::new(ps.omega_matrix().clone(), Symmetry::Skew).unwrap();
        let compatible = prelie_from_symplectic(&lie, &omega).unwrap();
        assert_eq!(compatible.sub_adjacent().cube(), lie.cube());
    }
}

#[test]
fn class_vector_length_matches_second_cohomology() {
    // the class of any 2-cocycle has one coordinate per dimension of H̃²
    for (a, r) in fixtures::s_matrix_pool() {
        let coh = SCohomology::new(&a, &r).unwrap();
        let h2 = cohomology_dims(&a, &r, 2, Complex::Subcomplex).unwrap()[1];
        // the zero direction is always a 2-cocycle
        let class = coh.class_vector(&SymTensor2::zero(a.dim()));
        assert_eq!(class.len(), h2, "dim {}", a.dim());
        assert!(class.iter().all(|c| c == &rat(0)));
    }
}

/// Weak homomorphisms of s-matrices carry over to their phase spaces: every
/// passing pair the suite produces must also pass at the phase-space level.
#[test]
fn weak_homomorphisms_descend_to_phase_spaces() {
    let id2 = Matrix::identity(2);
    let b2 = fixtures::b2();
    let (l2, r2) = b2.mult_operators(&basis_vec(2, 1)).unwrap();
    let ad2 = &l2 - &r2;
    let cases: Vec<(_, SymTensor2, SymTensor2, Matrix, Matrix)> = vec![
        (
            fixtures::a2(),
            fixtures::r_b(),
            fixtures::r_b(),
            id2.clone(),
            id2.clone(),
        ),
        (
            fixtures::a2(),
            fixtures::r_a(),
            fixtures::r_a(),
            id2.clone(),
            id2.clone(),
        ),
        (
            b2.clone(),
            fixtures::r_b2(),
            fixtures::r_b2(),
            &Matrix::identity(2) + &ad2,
            id2.clone(),
        ),
        // the same pair at a different parameter value
        (
            b2.clone(),
            fixtures::r_b2(),
            fixtures::r_b2(),
            &Matrix::identity(2) + &ad2.scale(&rat(3)),
            id2.clone(),
        ),
    ];
    for (a, r1, r2t, phi, varphi) in cases {
        let s_level = is_weak_homomorphism(&a, &r1, &r2t, &phi, &varphi).unwrap();
        assert!(s_level.pass, "s-matrix level must pass first");
        let ps_target = build_phase_space(&a, &r1).unwrap();
        let ps_source = build_phase_space(&a, &r2t).unwrap();
        let ps_level = is_weak_phase_homomorphism(&ps_source, &ps_target, &phi, &varphi).unwrap();
        assert!(ps_level.pass, "phase-space level must inherit the pass");
    }
}

#[test]
fn equivalences_transport_along_every_nijenhuis_scan_hit() {
    // every scanned Nijenhuis element x makes its own trivial deformation
    // direction equivalent to the zero deformation
    for (a, r) in fixtures::s_matrix_pool() {
        let zero = SymTensor2::zero(a.dim());
        for x in prelie_core::deformation::scan_nijenhuis(&a, &r).unwrap() {
            let rt = prelie_core::deformation::trivial_deformation(&a, &r, &x).unwrap();
            let kappa = rt.coeff(1).cloned().unwrap_or_else(|| zero.clone());
            let report = deformations_equivalent(&a, &r, &zero, &kappa, &x).unwrap();
            assert!(report.pass);
        }
    }
}
