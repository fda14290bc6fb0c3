//! The built-in systems, as files, with the suites each is expected to pass.

use crate::chevalley::{chevalley_algebra, chevalley_phi, ChevalleyType};
use crate::corpus;
use crate::error::Error;
use crate::exact::Vector;
use crate::format::{AlgebraDoc, GradedDoc, MapDoc, Metadata, SystemFile, TripleDoc};
use crate::lie::osp12_model;
use crate::report::{Check, Report};
use crate::structurable::{kts_from_structurable, AlgebraMorphism, InvolutiveAlgebra};
use crate::triple::{SignPair, TripleSystem};
use crate::workbench::{run_suite, Options};

#[derive(Clone, Debug)]
pub struct CatalogItem {
    pub id: &'static str,
    pub description: &'static str,
    /// Suites the item must pass. A map item is checked with `automorphism`
    /// against its base.
    pub suites: &'static [&'static str],
    /// For a map: the catalog id of the system it acts on.
    pub base: Option<&'static str>,
    pub file: SystemFile,
}

const ALGEBRA_SUITES: &[&str] = &["structurable", "kantor", "fkts:-1,1", "lemmas-kantor"];
const GRADED_SUITES: &[&str] = &["super-jacobi", "grading", "phi"];

fn algebra(id: &'static str, description: &'static str, a: InvolutiveAlgebra) -> CatalogItem {
    CatalogItem {
        id,
        description,
        suites: ALGEBRA_SUITES,
        base: None,
        file: SystemFile::Algebra(AlgebraDoc {
            algebra: a,
            sigma: None,
            meta: Metadata::provenance("built-in"),
        }),
    }
}

fn map(id: &'static str, description: &'static str, base: &'static str, s: AlgebraMorphism) -> CatalogItem {
    CatalogItem {
        id,
        description,
        suites: &["automorphism"],
        base: Some(base),
        file: SystemFile::Map(MapDoc {
            map: s.op().clone(),
            label: Some(id.to_string()),
            meta: Metadata::provenance("built-in"),
        }),
    }
}

fn triple(
    id: &'static str,
    description: &'static str,
    suites: &'static [&'static str],
    t: TripleSystem,
    signs: SignPair,
    unit: Vector,
) -> CatalogItem {
    CatalogItem {
        id,
        description,
        suites,
        base: None,
        file: SystemFile::Triple(TripleDoc {
            system: t,
            signs: Some(signs),
            unit: Some(unit),
            meta: Metadata::provenance("built-in"),
        }),
    }
}

fn graded(id: &'static str, description: &'static str, doc: GradedDoc) -> CatalogItem {
    CatalogItem {
        id,
        description,
        suites: GRADED_SUITES,
        base: None,
        file: SystemFile::Graded(doc),
    }
}

fn chevalley(kind: ChevalleyType) -> Result<GradedDoc, Error> {
    let l = chevalley_algebra(kind)?;
    let phi = chevalley_phi(&l)?;
    Ok(GradedDoc {
        algebra: l.algebra,
        phi: Some(phi),
        signs: Some(SignPair::KANTOR),
        meta: Metadata::provenance("built-in").with_construction("Chevalley basis graded by the highest root"),
    })
}

/// All built-in items, in a fixed order.
pub fn catalog() -> Vec<CatalogItem> {
    let minus = SignPair::new(-1, -1).expect("valid signs");
    let quat_kts = kts_from_structurable(&corpus::quat())
        .expect("quat is structurable")
        .with_label("quat-kts");
    let (osp, _) = osp12_model().expect("osp(1,2) model");
    let mut items = vec![
        algebra("unit-field", "the rationals, trivial involution", corpus::unit_field()),
        algebra("split-pair", "F x F, exchange involution", corpus::split_pair()),
        map(
            "split-pair-swap",
            "coordinate swap of the split pair",
            "split-pair",
            corpus::split_pair_swap(),
        ),
        algebra("quat", "quaternions 1, i, j, k with conjugation", corpus::quat()),
        map("quat-conj-i", "x -> i x i^-1", "quat", corpus::quat_conj_i()),
        algebra(
            "mat2-transpose",
            "2x2 matrices with the transpose",
            corpus::mat2_transpose(),
        ),
        map(
            "mat2-conj-diag",
            "conjugation by diag(1,-1)",
            "mat2-transpose",
            corpus::mat2_conj_diag(),
        ),
        triple(
            "quat-kts",
            "Kantor triple system of the quaternions",
            &["kantor", "fkts:-1,1", "lemmas-kantor", "star"],
            quat_kts,
            SignPair::KANTOR,
            Vector::from_ints(&[1, 0, 0, 0]),
        ),
        triple(
            "scalar-fkts",
            "F with xyz = x y z",
            &["fkts:-1,-1", "lemmas-mm", "special-unitary", "lie", "b01"],
            corpus::scalar_fkts(),
            minus,
            Vector::from_ints(&[1]),
        ),
        triple(
            "swap-fkts",
            "F^2 with {xyz} = x swap(y) z",
            &["fkts:-1,-1", "lemmas-mm", "lie", "b01"],
            corpus::swap_fkts(),
            minus,
            Vector::from_ints(&[1, 1]),
        ),
        graded(
            "osp12",
            "osp(1,2) as 3x3 supermatrices",
            GradedDoc {
                algebra: osp.algebra,
                phi: Some(osp.phi),
                signs: Some(minus),
                meta: Metadata::provenance("built-in").with_construction("supermatrix model, basis F, Y, H, X, E"),
            },
        ),
    ];
    for (id, kind) in [
        ("chevalley-A2", ChevalleyType::A2),
        ("chevalley-A3", ChevalleyType::A3),
        ("chevalley-C2", ChevalleyType::C2),
    ] {
        let doc = chevalley(kind).expect("Chevalley construction");
        items.push(graded(id, "Chevalley basis, 5-graded by the highest root", doc));
    }
    items
}

pub fn catalog_item(id: &str) -> Result<CatalogItem, Error> {
    catalog()
        .into_iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::Unsupported(format!("no catalog item {id:?}")))
}

/// Runs one suite on an item, resolving map items against their base.
pub fn run_item_suite(item: &CatalogItem, suite: &str) -> Result<Report, Error> {
    let mut report = match (&item.file, item.base) {
        (SystemFile::Map(m), Some(base)) => {
            let base = catalog_item(base)?;
            let opts = Options {
                map: Some(m.map.clone()),
                ..Options::default()
            };
            run_suite(&base.file, suite, &opts)?
        }
        (file, _) => run_suite(file, suite, &Options::default())?,
    };
    report.item = Some(item.id.to_string());
    Ok(report)
}

/// Every item survives a save/load cycle unchanged and passes its suites
/// after reloading.
pub fn self_test() -> Result<Vec<Report>, Error> {
    let mut out = Vec::new();
    for item in catalog() {
        let text = item.file.to_canonical_string();
        let reloaded = SystemFile::parse(&text)?;
        let mut io = Report::new(item.file.label().unwrap_or(item.id), "load(save(x)) = x");
        io.item = Some(item.id.to_string());
        io.push(Check::compare(
            "load(save(x)) = x",
            reloaded.to_canonical_string() == text,
            true,
        ));
        out.push(io);
        let item = CatalogItem { file: reloaded, ..item };
        for suite in item.suites {
            out.push(run_item_suite(&item, suite)?);
        }
    }
    Ok(out)
}
