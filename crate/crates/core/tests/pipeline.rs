use dolbeault::cohomology::{self, Context};
use dolbeault::linalg::SparseMatrix;
use dolbeault::rootsys::Weight;
use dolbeault::translate::TranslationRun;

#[test]
fn kostant_b2_borel_betti_follow_lengths() {
    let ctx = Context::new("B2", &[], 4).unwrap();
    let r = cohomology::kostant_verify(&ctx, &Weight::from_ints(&[0, 0]), 64).unwrap();
    assert!(r.pass);
    assert_eq!(r.betti, [1, 2, 2, 2, 1]);
}

#[test]
fn kostant_a2_maximal_parabolic() {
    let ctx = Context::new("A2", &[0], 4).unwrap();
    let r = cohomology::kostant_verify(&ctx, &Weight::from_ints(&[1, 0]), 64).unwrap();
    assert!(r.pass);
    assert!(r.computed.iter().all(|d| d.len() == 1));
    assert_eq!(r.betti, [2, 3, 1]);
}

#[test]
fn les_of_whole_and_zero_subcomplex() {
    let ctx = Context::new("A1", &[], 4).unwrap();
    let x = ctx.irrep(&Weight::from_ints(&[2]), 16).unwrap();
    let c = cohomology::build_full_complex(&ctx, &x, None).unwrap();
    let ids: Vec<SparseMatrix> = c.dims.iter().map(|&d| SparseMatrix::identity(d)).collect();
    let les = cohomology::les_from_subcomplex(&ctx, &c, &c, &ids).unwrap();
    assert!(les.exact);
    assert!(les.quotient.betti().iter().all(|&d| d == 0));
    assert!(les.connecting.iter().all(|m| m.is_zero()));
}

#[test]
fn translation_run_from_json() {
    let run: TranslationRun =
        serde_json::from_str(r#"{"lie_type":"A2","levi":[1],"theta":[0,0],"nu":[1,1],"lambda":[1,1]}"#).unwrap();
    let r = run.run().unwrap();
    assert_eq!(r.status, "pass");
    assert!(r.condition_c && r.primary_active);
    assert_eq!(r.iso.source_primary, r.iso.target_primary);
}

#[test]
fn levi_index_zero_is_rejected() {
    let run: TranslationRun =
        serde_json::from_str(r#"{"lie_type":"A2","levi":[0],"theta":[0,0],"nu":[1,1],"lambda":[1,1]}"#).unwrap();
    assert!(run.run().is_err());
}
