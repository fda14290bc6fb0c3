//! Chevalley bases of small simple Lie algebras, their grading by the
//! highest root, and the Kantor, balanced and Freudenthal triple systems on
//! the degree-one component.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::exact::{operator_inverse, solve_in_basis, span_basis_in, LinearOperator, Scalar, Vector};
use crate::lie::{check_grading, check_super_jacobi, phi_report, Element, GradedSuperalgebra, PhiMap};
use crate::report::{Check, Report, Witness};
use crate::sweep::first_failure;
use crate::triple::{check_fkts, operator_mismatch, SignPair, TripleSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChevalleyType {
    A1,
    A2,
    A3,
    C2,
}

impl ChevalleyType {
    pub const ALL: [ChevalleyType; 4] = [
        ChevalleyType::A1,
        ChevalleyType::A2,
        ChevalleyType::A3,
        ChevalleyType::C2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ChevalleyType::A1 => "A1",
            ChevalleyType::A2 => "A2",
            ChevalleyType::A3 => "A3",
            ChevalleyType::C2 => "C2",
        }
    }
}

impl fmt::Display for ChevalleyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChevalleyType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ChevalleyType::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Unsupported(format!("Chevalley type {s:?}; available: A1, A2, A3, C2")))
    }
}

/// A root, by its coefficients in the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub coeffs: Vec<i64>,
    /// `alpha(h_i)` for the Cartan basis.
    pub values: Vec<Scalar>,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    fn label(&self) -> String {
        let c: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        format!("x({})", c.join(","))
    }
}

/// A Chevalley basis realized by matrices. Basis order: positive root
/// vectors by height, then `h_1..h_l`, then the negative root vectors in
/// the matching order. Degrees are those of the highest-root grading.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    pub kind: ChevalleyType,
    pub rank: usize,
    /// Roots of the basis vectors that are root vectors, by basis index.
    pub roots: Vec<Option<Root>>,
    pub matrices: Vec<LinearOperator>,
    pub algebra: GradedSuperalgebra,
    /// Basis index of `x_rho` for the highest root.
    pub highest: usize,
    /// Basis index of `x_-rho`.
    pub lowest: usize,
    gram_inv: LinearOperator,
}

fn unit(n: usize, r: usize, c: usize) -> LinearOperator {
    let mut m = LinearOperator::zero(n);
    m.set(r, c, Scalar::ONE);
    m
}

fn ad_value(h: &LinearOperator, x: &LinearOperator) -> Scalar {
    let c = h.commutator(x);
    let (r, col) = (0..x.dim())
        .flat_map(|r| (0..x.dim()).map(move |c| (r, c)))
        .find(|&(r, c)| !x.get(r, c).is_zero())
        .expect("root vectors are nonzero");
    c.get(r, col) / x.get(r, col)
}

/// Positive root vectors, simple root indices among them, and Cartan basis.
fn realization(kind: ChevalleyType) -> (usize, Vec<LinearOperator>, Vec<usize>, Vec<LinearOperator>) {
    match kind {
        ChevalleyType::A1 | ChevalleyType::A2 | ChevalleyType::A3 => {
            let n = match kind {
                ChevalleyType::A1 => 2,
                ChevalleyType::A2 => 3,
                _ => 4,
            };
            let mut pos = Vec::new();
            let mut simple = Vec::new();
            for d in 1..n {
                for i in 0..n - d {
                    if d == 1 {
                        simple.push(pos.len());
                    }
                    pos.push(unit(n, i, i + d));
                }
            }
            let hs = (0..n - 1).map(|i| &unit(n, i, i) - &unit(n, i + 1, i + 1)).collect();
            (n, pos, simple, hs)
        }
        ChevalleyType::C2 => {
            // sp4 for the form with Gram matrix [[0, I], [-I, 0]]
            let u = |r, c| unit(4, r, c);
            let pos = vec![
                &u(0, 1) - &u(3, 2), // e1 - e2
                u(1, 3),             // 2 e2
                &u(0, 3) + &u(1, 2), // e1 + e2
                u(0, 2),             // 2 e1
            ];
            let hs = vec![
                LinearOperator::diagonal(&[1, -1, -1, 1].map(Scalar::from_int)),
                LinearOperator::diagonal(&[0, 1, 0, -1].map(Scalar::from_int)),
            ];
            (4, pos, vec![0, 1], hs)
        }
    }
}

/// Builds the Chevalley basis of the given type and checks Jacobi.
pub fn chevalley_algebra(kind: ChevalleyType) -> Result<ChevalleyAlgebra, Error> {
    let (_, pos, simple, hs) = realization(kind);
    let rank = hs.len();
    let values = |x: &LinearOperator| -> Vector { Vector::new(hs.iter().map(|h| ad_value(h, x)).collect()) };
    let simple_values: Vec<Vector> = simple.iter().map(|&i| values(&pos[i])).collect();
    let mut pos_roots = Vec::new();
    for x in &pos {
        let v = values(x);
        let coeffs = solve_in_basis(&simple_values, &v)
            .ok_or_else(|| Error::invalid("root outside the span of the simple roots", None))?
            .iter()
            .map(|c| {
                c.to_i64()
                    .ok_or_else(|| Error::invalid("non-integral root coefficient", None))
            })
            .collect::<Result<Vec<_>, _>>()?;
        pos_roots.push(Root {
            coeffs,
            values: v.into_entries(),
        });
    }
    let mut order: Vec<usize> = (0..pos.len()).collect();
    order.sort_by_key(|&i| (pos_roots[i].height(), i));
    let neg = |r: &Root| Root {
        coeffs: r.coeffs.iter().map(|c| -c).collect(),
        values: r.values.iter().map(|c| -c).collect(),
    };

    let mut matrices = Vec::new();
    let mut roots = Vec::new();
    for &i in &order {
        matrices.push(pos[i].clone());
        roots.push(Some(pos_roots[i].clone()));
    }
    for h in &hs {
        matrices.push(h.clone());
        roots.push(None);
    }
    for &i in &order {
        matrices.push(pos[i].transpose());
        roots.push(Some(neg(&pos_roots[i])));
    }
    let p = pos.len();
    let highest = p - 1;
    let lowest = matrices.len() - 1;

    let h_rho = matrices[highest].commutator(&matrices[lowest]);
    let mut elements = Vec::new();
    for (i, m) in matrices.iter().enumerate() {
        let degree = match &roots[i] {
            Some(_) => ad_value(&h_rho, m).to_i64().expect("integral"),
            None => 0,
        };
        let label = match &roots[i] {
            Some(r) => r.label(),
            None => format!("h{}", i - p + 1),
        };
        elements.push(Element::new(label, degree as i8, false));
    }
    let flat: Vec<Vector> = matrices.iter().map(|m| Vector::new(m.flat().to_vec())).collect();
    let mut bracket = Vec::with_capacity(matrices.len().pow(3));
    for a in &matrices {
        for b in &matrices {
            let c = solve_in_basis(&flat, &Vector::new(a.commutator(b).flat().to_vec()))
                .ok_or_else(|| Error::invalid("matrix realization is not closed", None))?;
            bracket.extend(c);
        }
    }
    let algebra = GradedSuperalgebra::new(elements, bracket)?.with_label(kind.name());
    if let Some(c) = check_super_jacobi(&algebra).first_failure() {
        return Err(Error::invalid(c.name.clone(), c.witness.clone()));
    }
    let gram = LinearOperator::from_fn(rank, |j| {
        Vector::new(hs.iter().map(|h| trace(&h.compose(&hs[j]))).collect())
    });
    Ok(ChevalleyAlgebra {
        kind,
        rank,
        roots,
        matrices,
        algebra,
        highest,
        lowest,
        gram_inv: operator_inverse(&gram)?,
    })
}

fn trace(m: &LinearOperator) -> Scalar {
    (0..m.dim()).fold(Scalar::ZERO, |acc, i| &acc + m.get(i, i))
}

impl ChevalleyAlgebra {
    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    /// `(alpha|beta)`, induced by the trace form (a multiple of the Killing
    /// form).
    pub fn form(&self, a: &Root, b: &Root) -> Scalar {
        let bv = self.gram_inv.apply(&Vector::new(b.values.clone()));
        Vector::new(a.values.clone()).dot(&bv)
    }

    pub fn highest_root(&self) -> &Root {
        self.roots[self.highest].as_ref().expect("root vector")
    }

    fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.roots
            .iter()
            .position(|r| r.as_ref().is_some_and(|r| r.coeffs == coeffs))
    }

    /// Structural checks on the basis.
    pub fn report(&self) -> Report {
        let g = &self.algebra;
        let mut r = Report::new(self.kind.name(), "chevalley");
        r.extend(check_super_jacobi(g));
        let w = self.roots.iter().enumerate().find_map(|(i, root)| {
            let root = root.as_ref()?;
            let neg: Vec<i64> = root.coeffs.iter().map(|c| -c).collect();
            let j = self.root_index(&neg)?;
            let h = g.bracket(&g.basis(i), &g.basis(j));
            let value = g.bracket(&h, &g.basis(i));
            let expected = g.basis(i).scale(&Scalar::from_int(2));
            (value != expected).then(|| Witness::new(vec![i, j], value, expected))
        });
        r.push(Check::from_sweep("[[x_a, x_-a], x_a] = 2 x_a", w));
        let rho = &self.highest_root().coeffs;
        let w = self.roots.iter().enumerate().find_map(|(i, root)| {
            let root = root.as_ref().filter(|r| r.is_positive())?;
            let sum: Vec<i64> = rho.iter().zip(&root.coeffs).map(|(a, b)| a + b).collect();
            self.root_index(&sum)
                .map(|k| Witness::new(vec![i, k], "rho + alpha is a root", "not a root"))
        });
        r.push(Check::from_sweep("rho + alpha is not a root for alpha > 0", w));
        r
    }
}

/// The components of the highest-root grading and the skew form on the
/// degree-one component.
#[derive(Clone, Debug)]
pub struct HighestRootGrading {
    /// Basis indices of the components of degree -2..2.
    pub components: [Vec<usize>; 5],
    /// `<u|v>` on the degree-one basis, with `[u,v] = <u|v> x_rho`.
    pub form: Vec<Vec<Scalar>>,
    pub degenerate: bool,
    pub report: Report,
}

impl HighestRootGrading {
    pub fn dims(&self) -> [usize; 5] {
        [0, 1, 2, 3, 4].map(|i| self.components[i].len())
    }
}

pub fn highest_root_grading(l: &ChevalleyAlgebra) -> HighestRootGrading {
    let g = &l.algebra;
    let components = [-2, -1, 0, 1, 2].map(|d| g.component(d));
    let mut r = check_grading(g);
    let rho = l.highest_root();
    let membership = l.roots.iter().enumerate().find_map(|(i, root)| {
        let d = g.elements()[i].degree;
        let expected = match root {
            None => 0,
            Some(a) if a.coeffs == rho.coeffs => 2,
            Some(a) if a.coeffs.iter().zip(&rho.coeffs).all(|(x, y)| *x == -y) => -2,
            Some(a) => {
                let f = l.form(rho, a);
                if f.is_zero() {
                    0
                } else if a.is_positive() {
                    1
                } else {
                    -1
                }
            }
        };
        (d != expected).then(|| Witness::new(vec![i], d, expected))
    });
    r.push(Check::from_sweep("components match (rho|alpha)", membership));
    r.push(Check::compare(
        "component dims sum to dim g",
        components.iter().map(Vec::len).sum::<usize>(),
        g.dim(),
    ));
    let g1 = &components[3];
    let mut form = vec![vec![Scalar::ZERO; g1.len()]; g1.len()];
    let mut outside = None;
    for (a, &i) in g1.iter().enumerate() {
        for (b, &j) in g1.iter().enumerate() {
            let v = g.bracket(&g.basis(i), &g.basis(j));
            let c = v[l.highest].clone();
            if v != g.basis(l.highest).scale(&c) && outside.is_none() {
                outside = Some(Witness::new(vec![a, b], &v, "a multiple of x_rho"));
            }
            form[a][b] = c;
        }
    }
    r.push(Check::from_sweep("[u,v] in F x_rho", outside));
    let alt = (0..g1.len())
        .flat_map(|a| (0..g1.len()).map(move |b| (a, b)))
        .find(|&(a, b)| form[a][b] != -&form[b][a])
        .map(|(a, b)| Witness::new(vec![a, b], &form[a][b], -&form[b][a]));
    r.push(Check::from_sweep("<u|v> = -<v|u>", alt));
    HighestRootGrading {
        degenerate: g1.is_empty(),
        components,
        form,
        report: r,
    }
}

/// `Phi(x_a) = -x_-a`, `Phi = -id` on the Cartan subalgebra, realized as
/// `X -> -X^T`.
pub fn chevalley_phi(l: &ChevalleyAlgebra) -> Result<PhiMap, Error> {
    let flat: Vec<Vector> = l.matrices.iter().map(|m| Vector::new(m.flat().to_vec())).collect();
    let cols = l
        .matrices
        .iter()
        .map(|m| {
            solve_in_basis(&flat, &Vector::new((-&m.transpose()).flat().to_vec()))
                .map(Vector::new)
                .ok_or_else(|| Error::invalid("-X^T leaves the algebra", None))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let phi = PhiMap(LinearOperator::from_columns(&cols)?);
    let r = phi_report(&l.algebra, &phi, SignPair::KANTOR);
    if let Some(c) = r.first_failure() {
        return Err(Error::invalid(format!("phi: {}", c.name), c.witness.clone()));
    }
    Ok(phi)
}

/// The Kantor triple system on the degree-one component with
/// `sigma(z) = [x_rho, Phi(z)]` and the form.
#[derive(Clone, Debug)]
pub struct KantorOnG1 {
    pub system: TripleSystem,
    pub sigma: LinearOperator,
    pub form: Vec<Vec<Scalar>>,
    pub report: Report,
}

pub fn kantor_on_g1(l: &ChevalleyAlgebra, grading: &HighestRootGrading, phi: &PhiMap) -> Result<KantorOnG1, Error> {
    if grading.degenerate {
        return Err(Error::hypothesis(format!(
            "{}: the degree-one component is zero",
            l.kind
        )));
    }
    let g = &l.algebra;
    let g1 = &grading.components[3];
    let n = g1.len();
    let restrict = |v: &Vector| Vector::new(g1.iter().map(|&k| v[k].clone()).collect());
    let b = |i: usize| g.basis(g1[i]);
    let t = TripleSystem::from_fn(n, |i, j, k| {
        restrict(&g.bracket(&g.bracket(&b(i), &phi.apply(&b(j))), &b(k)))
    })
    .with_label(format!("{}-g1", l.kind));
    let x_rho = g.basis(l.highest);
    let sigma = LinearOperator::from_fn(n, |k| restrict(&g.bracket(&x_rho, &phi.apply(&b(k)))));
    let form = grading.form.clone();

    let mut r = check_fkts(&t, SignPair::KANTOR);
    r.subject = t.label().unwrap_or_default().to_string();
    r.suite = "kantor-on-g1".into();
    r.push(Check::from_sweep(
        "K(u,v) = <u|v> sigma",
        first_failure(n, 2, |w| {
            let k = t.k(&Vector::basis(n, w[0]), &Vector::basis(n, w[1]), 1);
            operator_mismatch(w, &k, &sigma.scale(&form[w[0]][w[1]]))
        }),
    ));
    let minus_id = LinearOperator::scalar(n, Scalar::from_int(-1));
    r.push(Check::from_sweep(
        "sigma^2 = -id",
        operator_mismatch(&[], &sigma.compose(&sigma), &minus_id),
    ));
    let (_, ks) = t.basis_operators(1);
    let span = span_basis_in(n, ks.iter())?;
    r.push(Check::compare("sigma in K(U,U)", span.contains(&sigma), true));
    Ok(KantorOnG1 {
        system: t,
        sigma,
        form,
        report: r,
    })
}

/// `{uvw} = u sigma(v) w`, with the (1,1) identities and
/// `K*(u,v) = -<u|v> id` checked.
pub fn balanced_twist(k: &KantorOnG1) -> Result<(TripleSystem, Report), Error> {
    let n = k.system.dim();
    let mut t = k.system.twisted_by(&k.sigma)?;
    if let Some(l) = k.system.label() {
        t = t.with_label(format!("{l}-balanced"));
    }
    let mut r = check_fkts(&t, SignPair::new(1, 1)?);
    r.suite = "balanced-twist".into();
    r.push(Check::from_sweep(
        "K*(u,v) = -<u|v> id",
        first_failure(n, 2, |w| {
            let kk = t.k(&Vector::basis(n, w[0]), &Vector::basis(n, w[1]), 1);
            operator_mismatch(w, &kk, &LinearOperator::scalar(n, -&k.form[w[0]][w[1]]))
        }),
    ));
    Ok((t, r))
}

/// `(uvw) = {uvw} - 1/2 <u|v> w + 1/2 <u|w> v + 1/2 <v|w> u`, with the
/// symmetry `(uvw) = (vuw)` swept.
pub fn freudenthal_product(t: &TripleSystem, form: &[Vec<Scalar>]) -> Result<(TripleSystem, Report), Error> {
    let n = t.dim();
    if form.len() != n || form.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: form.len(),
        });
    }
    let half = Scalar::new(1, 2).expect("nonzero");
    let mut out = TripleSystem::from_fn(n, |i, j, k| {
        let mut v = Vector::new(t.basis_product(i, j, k).to_vec());
        v[k] -= &half * &form[i][j];
        v[j] += &half * &form[i][k];
        v[i] += &half * &form[j][k];
        v
    });
    if let Some(l) = t.label() {
        out = out.with_label(format!("{l}-freudenthal"));
    }
    let mut r = Report::new(out.label().unwrap_or("system").to_string(), "freudenthal");
    r.push(Check::from_sweep(
        "(uvw) = (vuw)",
        first_failure(n, 3, |w| {
            let a = out.basis_product(w[0], w[1], w[2]);
            let b = out.basis_product(w[1], w[0], w[2]);
            (a != b).then(|| Witness::new(w.to_vec(), Vector::new(a.to_vec()), Vector::new(b.to_vec())))
        }),
    ));
    Ok((out, r))
}
