//! Named verification suites, conversions and constructions over
//! [`SystemFile`]s, shared by the command-line and Python front ends.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use crate::catalog::{catalog_item, CatalogItem};

use crate::bridge::{
    double_m21, lemma_suite_kantor, lemma_suite_mm, mu_normalize, skew_twist_11, star_suite,
    structurable_of_left_unital, twist,
};
use crate::error::Error;
use crate::exact::{LinearOperator, Scalar, Vector};
use crate::format::{AlgebraDoc, GradedDoc, Metadata, SystemFile, TripleDoc};
use crate::lie::{
    b01_decompose, b01_decompose_system, build_gu, check_grading, check_super_jacobi, phi_of_gu, phi_report,
    recover_fkts, B01Decomposition,
};
use crate::report::{Check, Report};
use crate::structurable::{
    algebra_automorphism_report, check_structurable, kts_from_structurable, twisted_kts, AlgebraMorphism,
};
use crate::triple::{
    check_fkts, check_gjts, check_kts, is_automorphism, special_unitary_report, SignPair, TripleMorphism, TripleSystem,
};

/// Suite names accepted by [`run_suite`]. `fkts` also takes a sign pair as
/// `fkts:e,d`.
pub const SUITES: &[&str] = &[
    "gjts",
    "kantor",
    "fkts",
    "structurable",
    "lemmas-kantor",
    "lemmas-mm",
    "star",
    "special-unitary",
    "lie",
    "b01",
    "super-jacobi",
    "grading",
    "phi",
    "automorphism",
];

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub unit: Option<Vector>,
    pub signs: Option<SignPair>,
    pub map: Option<LinearOperator>,
}

/// The triple system a file stands for: the system itself, or the Kantor
/// system of an algebra (twisted by its `sigma` when present).
fn triple_of(file: &SystemFile) -> Result<(TripleSystem, Option<SignPair>, Option<Vector>), Error> {
    match file {
        SystemFile::Triple(d) => Ok((d.system.clone(), d.signs, d.unit.clone())),
        SystemFile::Algebra(d) => {
            let t = match &d.sigma {
                Some(s) => twisted_kts(&d.algebra, &AlgebraMorphism::new(s.clone()))?,
                None => kts_from_structurable(&d.algebra)?,
            };
            let t = match d.algebra.label() {
                Some(l) => t.with_label(format!("{l}-kts")),
                None => t,
            };
            Ok((t, Some(SignPair::KANTOR), Some(d.algebra.unit().clone())))
        }
        _ => Err(Error::Unsupported(format!(
            "this suite needs a triple system, not a {}",
            file.kind()
        ))),
    }
}

fn unit_for(opts: &Options, default: Option<Vector>) -> Result<Vector, Error> {
    opts.unit
        .clone()
        .or(default)
        .ok_or_else(|| Error::hypothesis("this suite needs a left unit (pass --unit)"))
}

fn signs_for(opts: &Options, default: Option<SignPair>) -> Result<SignPair, Error> {
    opts.signs
        .or(default)
        .ok_or_else(|| Error::hypothesis("this suite needs a sign pair (pass --signs e,d)"))
}

fn graded_signs(d: &GradedDoc, opts: &Options) -> SignPair {
    opts.signs.or(d.signs).unwrap_or_else(|| {
        if d.algebra.is_super() {
            SignPair::new(-1, -1).expect("valid")
        } else {
            SignPair::KANTOR
        }
    })
}

/// Runs a named suite on a file.
pub fn run_suite(file: &SystemFile, suite: &str, opts: &Options) -> Result<Report, Error> {
    let start = Instant::now();
    let mut r = dispatch(file, suite, opts)?;
    r.elapsed = Some(start.elapsed());
    Ok(r)
}

fn dispatch(file: &SystemFile, suite: &str, opts: &Options) -> Result<Report, Error> {
    let (name, arg) = match suite.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (suite, None),
    };
    if !SUITES.contains(&name) || (arg.is_some() && name != "fkts") {
        return Err(Error::Unsupported(format!(
            "unknown suite {suite:?}; available: {}",
            SUITES.join(", ")
        )));
    }
    match (name, file) {
        ("structurable", SystemFile::Algebra(d)) => Ok(check_structurable(&d.algebra)),
        ("super-jacobi", SystemFile::Graded(d)) => Ok(check_super_jacobi(&d.algebra)),
        ("grading", SystemFile::Graded(d)) => Ok(check_grading(&d.algebra)),
        ("phi", SystemFile::Graded(d)) => {
            let phi = d
                .phi
                .as_ref()
                .ok_or_else(|| Error::hypothesis("the file carries no phi"))?;
            Ok(phi_report(&d.algebra, phi, graded_signs(d, opts)))
        }
        ("b01", SystemFile::Graded(d)) => {
            let phi = d
                .phi
                .as_ref()
                .ok_or_else(|| Error::hypothesis("the file carries no phi"))?;
            let e = unit_for(opts, None)?;
            Ok(b01_decompose(&d.algebra, phi, &e)?.report)
        }
        ("automorphism", _) => {
            let s = opts
                .map
                .clone()
                .ok_or_else(|| Error::hypothesis("this suite needs --map"))?;
            automorphism_report(file, &s)
        }
        (_, SystemFile::Algebra(_) | SystemFile::Triple(_))
            if !matches!(name, "structurable" | "super-jacobi" | "grading" | "phi") =>
        {
            let (t, signs, unit) = triple_of(file)?;
            match name {
                "gjts" => Ok(check_gjts(&t)),
                "kantor" => Ok(check_kts(&t)),
                "fkts" => {
                    let s = match arg {
                        Some(a) => a.parse()?,
                        None => signs_for(opts, signs)?,
                    };
                    Ok(check_fkts(&t, s))
                }
                "lemmas-kantor" => lemma_suite_kantor(&t, &unit_for(opts, unit)?),
                "lemmas-mm" => lemma_suite_mm(&t, &unit_for(opts, unit)?),
                "star" => star_suite(&t, &unit_for(opts, unit)?),
                "special-unitary" => Ok(special_unitary_report(&t, signs_for(opts, signs)?)),
                "lie" => lie_report(&t, signs_for(opts, signs)?),
                "b01" => Ok(b01_decompose_system(&t, &unit_for(opts, unit)?)?.1.report),
                _ => unreachable!("suite names are checked above"),
            }
        }
        _ => Err(Error::Unsupported(format!(
            "suite {name} does not apply to a {}",
            file.kind()
        ))),
    }
}

fn automorphism_report(file: &SystemFile, s: &LinearOperator) -> Result<Report, Error> {
    match file {
        SystemFile::Algebra(d) => Ok(algebra_automorphism_report(
            &d.algebra,
            &AlgebraMorphism::new(s.clone()),
        )),
        SystemFile::Triple(d) => {
            let mut r = Report::new(d.system.label().unwrap_or("system"), "automorphism");
            let ok = is_automorphism(&d.system, &TripleMorphism::new(s.clone()))?;
            r.push(Check::compare("S(xyz) = S(x)S(y)S(z)", ok, true));
            Ok(r)
        }
        _ => Err(Error::Unsupported(format!("automorphisms of a {}", file.kind()))),
    }
}

/// `g(U)` integrity: super-Jacobi, grading, `Phi`, and recovery of `U`.
pub fn lie_report(t: &TripleSystem, signs: SignPair) -> Result<Report, Error> {
    let gu = build_gu(t, signs)?;
    let phi = phi_of_gu(&gu)?;
    let g = gu.algebra();
    let mut r = Report::new(g.label().unwrap_or("g(U)"), "lie");
    r.extend(check_super_jacobi(g));
    r.extend(check_grading(g));
    r.extend(phi_report(g, &phi, signs));
    let dims = gu.degree_dims();
    r.push(Check::pass(format!(
        "dims by degree ({}, {}, {}, {}, {})",
        dims[0], dims[1], dims[2], dims[3], dims[4]
    )));
    let back = recover_fkts(g, &phi, signs)?;
    r.push(Check::compare(
        "xyz = [[x,Phi(y)],z]",
        back.tensor() == t.tensor(),
        true,
    ));
    Ok(r)
}

/// Conversion directions for [`convert`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    KtsToStructurable,
    StructurableToKts,
    Twist,
    DoubleM21,
    MuNormalize,
    SkewTwist11,
}

impl Direction {
    pub const ALL: [Direction; 6] = [
        Direction::KtsToStructurable,
        Direction::StructurableToKts,
        Direction::Twist,
        Direction::DoubleM21,
        Direction::MuNormalize,
        Direction::SkewTwist11,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Direction::KtsToStructurable => "kts-to-structurable",
            Direction::StructurableToKts => "structurable-to-kts",
            Direction::Twist => "twist",
            Direction::DoubleM21 => "double-m21",
            Direction::MuNormalize => "mu-normalize",
            Direction::SkewTwist11 => "skew-twist-11",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Direction::ALL.into_iter().find(|d| d.name() == s).ok_or_else(|| {
            let names: Vec<_> = Direction::ALL.iter().map(|d| d.name()).collect();
            Error::Unsupported(format!("direction {s:?}; available: {}", names.join(", ")))
        })
    }
}

fn provenance(file: &SystemFile, what: &str) -> Metadata {
    let from = file.label().unwrap_or("input");
    Metadata::provenance(format!("{what} of {from}"))
}

fn require_passed(r: &Report, what: &str) -> Result<(), Error> {
    match r.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::invalid(format!("{what}: {}", c.name), c.witness.clone())),
    }
}

/// The check a file must pass before it is written.
pub fn self_check(file: &SystemFile) -> Result<Report, Error> {
    match file {
        SystemFile::Triple(d) => match d.signs {
            Some(s) => Ok(check_fkts(&d.system, s)),
            None => Ok(Report::new(d.system.label().unwrap_or("system"), "none")),
        },
        SystemFile::Algebra(d) => Ok(check_structurable(&d.algebra)),
        SystemFile::Graded(d) => {
            let mut r = check_super_jacobi(&d.algebra);
            r.extend(check_grading(&d.algebra));
            Ok(r)
        }
        SystemFile::Map(d) => Ok(Report::new(d.label.as_deref().unwrap_or("map"), "none")),
    }
}

fn finish(mut out: SystemFile, meta: Metadata) -> Result<SystemFile, Error> {
    *out.meta_mut() = meta;
    require_passed(&self_check(&out)?, "converted output")?;
    Ok(out)
}

pub fn convert(file: &SystemFile, direction: Direction, opts: &Options) -> Result<SystemFile, Error> {
    let meta = provenance(file, direction.name());
    match direction {
        Direction::KtsToStructurable => {
            let (t, _, unit) = triple_of(file)?;
            let e = unit_for(opts, unit)?;
            let (a, sigma) = structurable_of_left_unital(&t, &e)?;
            let sigma = (!sigma.op().is_identity()).then(|| sigma.op().clone());
            let a = match t.label() {
                Some(l) => a.with_label(
                    l.strip_suffix("-kts")
                        .map(String::from)
                        .unwrap_or(format!("{l}-algebra")),
                ),
                None => a,
            };
            finish(
                SystemFile::Algebra(AlgebraDoc {
                    algebra: a,
                    sigma,
                    meta: Metadata::default(),
                }),
                meta,
            )
        }
        Direction::StructurableToKts => {
            let SystemFile::Algebra(d) = file else {
                return Err(Error::Unsupported(format!("{direction} needs an involutive algebra")));
            };
            let sigma = opts.map.clone().or(d.sigma.clone());
            let t = match &sigma {
                Some(s) => twisted_kts(&d.algebra, &AlgebraMorphism::new(s.clone()))?,
                None => kts_from_structurable(&d.algebra)?,
            };
            let t = match d.algebra.label() {
                Some(l) => t.with_label(format!("{l}-kts")),
                None => t,
            };
            let doc = TripleDoc {
                system: t,
                signs: Some(SignPair::KANTOR),
                unit: Some(d.algebra.unit().clone()),
                meta: Metadata::default(),
            };
            finish(SystemFile::Triple(doc), meta)
        }
        Direction::Twist | Direction::DoubleM21 | Direction::MuNormalize => {
            let (t, signs, unit) = triple_of(file)?;
            let signs = signs_for(opts, signs)?;
            let (out, out_signs, out_unit) = match direction {
                Direction::Twist => {
                    let s = opts.map.clone().ok_or_else(|| Error::hypothesis("twist needs --map"))?;
                    let (out, sp) = twist(&t, &s, signs, None)?;
                    (
                        out.with_label(format!("{}-twisted", t.label().unwrap_or("system"))),
                        sp,
                        None,
                    )
                }
                Direction::DoubleM21 => {
                    let (out, sp) = double_m21(&t, signs)?;
                    (out, sp, None)
                }
                _ => {
                    let e = unit_for(opts, unit)?;
                    (mu_normalize(&t, &e)?, SignPair::new(-1, -1)?, Some(e))
                }
            };
            let doc = TripleDoc {
                system: out,
                signs: Some(out_signs),
                unit: out_unit,
                meta: Metadata::default(),
            };
            finish(SystemFile::Triple(doc), meta)
        }
        Direction::SkewTwist11 => {
            let SystemFile::Algebra(d) = file else {
                return Err(Error::Unsupported(format!("{direction} needs an involutive algebra")));
            };
            let f = opts
                .unit
                .clone()
                .ok_or_else(|| Error::hypothesis("skew-twist-11 needs the skew element f (pass --unit)"))?;
            let t = skew_twist_11(&d.algebra, &f)?;
            let t = t.with_label(format!("{}-skew-twist", d.algebra.label().unwrap_or("algebra")));
            let doc = TripleDoc {
                system: t,
                signs: Some(SignPair::new(1, 1)?),
                unit: None,
                meta: Metadata::default(),
            };
            finish(SystemFile::Triple(doc), meta)
        }
    }
}

/// `g(U)` as a file, with `Phi` and the sign pair.
pub fn build_lie(file: &SystemFile, opts: &Options) -> Result<SystemFile, Error> {
    let (t, signs, _) = triple_of(file)?;
    let signs = signs_for(opts, signs)?;
    let gu = build_gu(&t, signs)?;
    let phi = phi_of_gu(&gu)?;
    let doc = GradedDoc {
        algebra: gu.into_algebra(),
        phi: Some(phi),
        signs: Some(signs),
        meta: Metadata::default(),
    };
    finish(SystemFile::Graded(doc), provenance(file, "g(U)"))
}

/// Runs the B(0,1) decomposition on a (-1,-1) triple system with a unit or
/// on a graded file with `Phi` (the unit then given in its coordinates).
pub fn decompose(file: &SystemFile, opts: &Options) -> Result<B01Decomposition, Error> {
    match file {
        SystemFile::Graded(d) => {
            let phi = d
                .phi
                .as_ref()
                .ok_or_else(|| Error::hypothesis("the file carries no phi"))?;
            b01_decompose(&d.algebra, phi, &unit_for(opts, None)?)
        }
        _ => {
            let (t, _, unit) = triple_of(file)?;
            Ok(b01_decompose_system(&t, &unit_for(opts, unit)?)?.1)
        }
    }
}

pub fn multiplicities(d: &B01Decomposition) -> String {
    let (a, n, t) = d.counts();
    format!("adjoint×{a}, natural×{n}, trivial dim {t}")
}

/// A file path if one exists, otherwise a catalog id.
pub fn resolve_input(spec: &str) -> Result<(SystemFile, Option<CatalogItem>), Error> {
    if Path::new(spec).exists() {
        return Ok((SystemFile::load(spec)?, None));
    }
    match catalog_item(spec) {
        Ok(item) => Ok((item.file.clone(), Some(item))),
        Err(_) => Err(Error::Parse(format!(
            "{spec:?} is neither a readable file nor a catalog id"
        ))),
    }
}

/// The operator of a linear-map file or catalog item.
pub fn resolve_map(spec: &str) -> Result<LinearOperator, Error> {
    match resolve_input(spec)?.0 {
        SystemFile::Map(m) => Ok(m.map),
        other => Err(Error::Parse(format!(
            "{spec:?} is a {}, not a linear map",
            other.kind()
        ))),
    }
}

/// Parses `"1,0,-1/2"`, optionally in brackets.
pub fn parse_vector(s: &str) -> Result<Vector, Error> {
    let inner = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    inner
        .split(',')
        .map(|p| p.trim().trim_start_matches('+').parse::<Scalar>())
        .collect::<Result<Vec<_>, _>>()
        .map(Vector::new)
}

/// Suites run when none is named: the item's declared suites, or a choice
/// by file kind.
pub fn default_suites(file: &SystemFile, item: Option<&CatalogItem>) -> Vec<String> {
    if let Some(i) = item {
        return i.suites.iter().map(|s| s.to_string()).collect();
    }
    let v: &[&str] = match file {
        SystemFile::Triple(d) if d.signs.is_some() => &["fkts"],
        SystemFile::Triple(_) => &["gjts"],
        SystemFile::Algebra(_) => &["structurable", "kantor"],
        SystemFile::Graded(d) if d.phi.is_some() => &["super-jacobi", "grading", "phi"],
        SystemFile::Graded(_) => &["super-jacobi", "grading"],
        SystemFile::Map(_) => &[],
    };
    v.iter().map(|s| s.to_string()).collect()
}

/// Reports as a JSON array, witnesses included, timing left out.
pub fn reports_json(reports: &[Report]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}
