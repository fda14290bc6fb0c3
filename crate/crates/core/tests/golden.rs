use std::path::PathBuf;

use kantor_core::catalog::catalog_item;
use kantor_core::exact::operator_inverse;
use kantor_core::format::SystemFile;
use kantor_core::lie::align_to_osp12;
use kantor_core::workbench::{build_lie, Options};
use kantor_core::LinearOperator;

const GOLDEN: [&str; 4] = ["osp12", "chevalley-A2", "chevalley-A3", "chevalley-C2"];

fn golden_path(id: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("golden/v1")
        .join(format!("{id}.json"))
}

#[test]
fn catalog_matches_golden_bytes() {
    for id in GOLDEN {
        let text = catalog_item(id).unwrap().file.to_canonical_string();
        if std::env::var_os("KANTOR_BLESS").is_some() {
            std::fs::write(golden_path(id), &text).unwrap();
        }
        let golden = std::fs::read_to_string(golden_path(id)).unwrap();
        assert_eq!(text, golden, "{id}");
        let reloaded = SystemFile::load(golden_path(id)).unwrap();
        assert_eq!(reloaded.to_canonical_string(), golden, "{id}");
    }
}

#[test]
fn build_lie_scalar_fkts_matches_osp12_golden() {
    let SystemFile::Graded(golden) = SystemFile::load(golden_path("osp12")).unwrap() else {
        panic!("osp12 golden is not a graded superalgebra")
    };
    let built = build_lie(&catalog_item("scalar-fkts").unwrap().file, &Options::default()).unwrap();
    let SystemFile::Graded(d) = built else {
        panic!("expected a graded file")
    };
    let g = &d.algebra;
    let x = g.basis(g.component(1)[0]);
    let (images, r) = align_to_osp12(g, d.phi.as_ref().unwrap(), &x).unwrap();
    assert!(r.passed(), "{r}");
    let p = LinearOperator::from_columns(&images).unwrap();
    let aligned = g.change_basis(&p, golden.algebra.elements().to_vec()).unwrap();
    assert_eq!(aligned.bracket_tensor(), golden.algebra.bracket_tensor());

    // Phi carried to the new basis agrees with the golden Phi.
    let phi = d.phi.unwrap();
    let golden_phi = golden.phi.unwrap();
    let p_inv = operator_inverse(&p).unwrap();
    let carried = p_inv.compose(phi.op()).compose(&p);
    assert_eq!(&carried, golden_phi.op());
}
