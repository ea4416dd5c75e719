//! Named constructions and the certification pipeline run on them.

use serde::Serialize;

use crate::building::{building_bounds, FlagComplexA};
use crate::building_like::{
    build_filling, check_filling_identity, theta_lifted, theta_literal, verify_structure, FamilyTable, FillingFamily,
    GSet, PermGroup, Structure, ThetaMethod, ThetaReport, VerifyOptions, VerifyReport, WholeComplex,
};
use crate::complex::PureComplex;
use crate::corpus;
use crate::error::{Error, Result};
use crate::expansion::{
    bound_epsilon1, bound_expcolor, bound_simplex, h_exact, BoundCertificate, SearchOptions, DEFAULT_BUDGET,
};
use crate::matroids::{upper_bound_cochain, ExplicitChainTable, PartitionMatroid};
use crate::rational::{serde_ratio, Ratio};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Simplex { n: usize },
    Partition { n: usize, m: usize },
    Building { n: usize, q: u32 },
    Rp2,
    Sphere { d: usize },
}

fn arity(name: &str, params: &[u64], want: usize) -> Result<()> {
    if params.len() != want {
        return Err(Error::InvalidArgument(format!(
            "family {name} takes {want} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

impl Family {
    pub fn parse(name: &str, params: &[u64]) -> Result<Self> {
        let p = |i: usize| params[i] as usize;
        let fam = match name {
            "simplex" => {
                arity(name, params, 1)?;
                Family::Simplex { n: p(0) }
            }
            "partition" => {
                arity(name, params, 2)?;
                Family::Partition { n: p(0), m: p(1) }
            }
            "building" => {
                arity(name, params, 2)?;
                Family::Building {
                    n: p(0),
                    q: u32::try_from(params[1]).map_err(|_| Error::InvalidArgument("q too large".into()))?,
                }
            }
            "rp2" => {
                arity(name, params, 0)?;
                Family::Rp2
            }
            "sphere" => {
                arity(name, params, 1)?;
                Family::Sphere { d: p(0) }
            }
            other => return Err(Error::InvalidArgument(format!("unknown family {other}"))),
        };
        if matches!(
            fam,
            Family::Simplex { n: 0 } | Family::Partition { n: 0, .. } | Family::Sphere { d: 0 }
        ) || matches!(fam, Family::Partition { m: 0, .. })
        {
            return Err(Error::InvalidArgument("parameters must be positive".into()));
        }
        Ok(fam)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Simplex { .. } => "simplex",
            Family::Partition { .. } => "partition",
            Family::Building { .. } => "building",
            Family::Rp2 => "rp2",
            Family::Sphere { .. } => "sphere",
        }
    }

    pub fn params(&self) -> Vec<u64> {
        match *self {
            Family::Simplex { n } => vec![n as u64],
            Family::Partition { n, m } => vec![n as u64, m as u64],
            Family::Building { n, q } => vec![n as u64, q as u64],
            Family::Rp2 => vec![],
            Family::Sphere { d } => vec![d as u64],
        }
    }

    pub fn complex(&self, budget: u64) -> Result<PureComplex> {
        Ok(match *self {
            Family::Simplex { n } => corpus::simplex(n),
            Family::Partition { n, m } => PartitionMatroid::with_budget(n, m, budget)?.into_complex(),
            Family::Building { n, q } => FlagComplexA::with_budget(n, q, budget)?.complex().clone(),
            Family::Rp2 => corpus::rp2(),
            Family::Sphere { d } => corpus::simplex_boundary(d),
        })
    }

    /// Closed-form lower bounds and, for partition matroids with
    /// `(k+2) | m`, the explicit upper bound.
    pub fn closed_form_bounds(&self, k: usize, budget: u64) -> Result<Vec<BoundCertificate>> {
        let mut out = Vec::new();
        match *self {
            Family::Simplex { n } => {
                check_k(n, k)?;
                out.push(bound_simplex(n, k));
            }
            Family::Partition { n, m } => {
                check_k(n, k)?;
                out.push(bound_epsilon1(n, k));
                out.push(bound_expcolor(n, k, m));
                if m % (k + 2) == 0 {
                    let pm = PartitionMatroid::with_budget(n, m, budget)?;
                    out.push(upper_bound_cochain(&pm, k, budget)?.certificate());
                }
            }
            Family::Building { n, q } => {
                check_k(n, k)?;
                out.extend(building_bounds(&FlagComplexA::with_budget(n, q, budget)?, k, false)?);
            }
            Family::Rp2 | Family::Sphere { .. } => {}
        }
        Ok(out)
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k >= n {
        return Err(Error::InvalidArgument(format!("k={k} must be < n={n}")));
    }
    Ok(())
}

/// `(Δ_n, pt, S_{n+1}, Δ_n)`.
pub fn simplex_structure(n: usize) -> Structure {
    let x = corpus::simplex(n);
    let v = x.vertex_count() as u32;
    let mut t: Vec<u32> = (0..v).collect();
    t.swap(0, 1);
    let c: Vec<u32> = (0..v).map(|i| (i + 1) % v).collect();
    let g = PermGroup::from_images(v as usize, vec![t, c]).expect("permutations of the vertex set");
    Structure::new(x, g, GSet::Point, Box::new(WholeComplex)).expect("symmetries of the simplex")
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub verify: VerifyOptions,
    /// Also compute `h_k` exactly and check every bound against it.
    pub exact: bool,
    pub budget: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            verify: VerifyOptions::default(),
            exact: false,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ThetaSummary {
    pub source: &'static str,
    pub method: ThetaMethod,
    #[serde(with = "serde_ratio")]
    pub theta: Ratio,
    #[serde(with = "serde_ratio::opt")]
    pub lower_bound: Option<Ratio>,
    pub within_gromov: Option<bool>,
}

impl ThetaSummary {
    fn new(r: &ThetaReport, n: usize) -> Self {
        ThetaSummary {
            source: r.source.as_str(),
            method: r.method,
            theta: r.theta.clone(),
            lower_bound: r.lower_bound(),
            within_gromov: r.within_gromov(n),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelReport {
    pub k: usize,
    pub a_k: u64,
    pub theta: Vec<ThetaSummary>,
    pub bounds: Vec<BoundCertificate>,
    #[serde(with = "serde_ratio::opt")]
    pub exact: Option<Ratio>,
    pub failed_bound: Option<BoundCertificate>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FillingSummary {
    pub source: &'static str,
    pub ok: bool,
    pub violation: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertifyReport {
    pub family: Family,
    pub kmax: usize,
    pub verify: VerifyReport,
    pub filling: FillingSummary,
    pub levels: Vec<LevelReport>,
    pub passed: bool,
}

/// Verifies the building-like structure of a family up to `kmax`, builds
/// filling chains, and collects `a_k`, `θ_k` and every applicable bound.
pub fn certify(family: Family, kmax: usize, opts: &CertifyOptions) -> Result<CertifyReport> {
    let (st, explicit) = match family {
        Family::Simplex { n } => (simplex_structure(n), None),
        Family::Partition { n, m } => {
            let pm = PartitionMatroid::with_budget(n, m, opts.budget)?;
            let t = ExplicitChainTable::build(&pm);
            (pm.structure(), Some(t))
        }
        Family::Building { n, q } => (FlagComplexA::with_budget(n, q, opts.budget)?.structure(), None),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "family {} has no building-like structure",
                family.name()
            )))
        }
    };
    let x = &st.complex;
    let n = x.dim();
    check_k(n, kmax)?;
    let table: FamilyTable = st.family_table(kmax as isize);
    let verify = verify_structure(&st, &table, opts.verify);

    let engine: FillingFamily;
    let (fam, violation) = match &explicit {
        Some(t) => (t.as_filling(), check_filling_identity(x, t.as_filling(), None)),
        None => {
            engine = build_filling(x, &table)?;
            let v = check_filling_identity(x, &engine, Some(&table));
            (&engine, v)
        }
    };
    let filling = FillingSummary {
        source: fam.source().as_str(),
        ok: violation.is_none(),
        violation: violation.map(|v| format!("s={} dim={} tau={}: {}", v.s, v.dim, v.tau, v.reason)),
    };

    let mut levels = Vec::new();
    for k in 0..=kmax {
        let a_k = st.a_k(&table, k);
        let mut reports = Vec::new();
        if explicit.is_none() {
            reports.push(theta_literal(x, fam, k, Some(&table))?.with_a_k(a_k));
        }
        if fam.s_count() == 1 {
            reports.push(theta_lifted(x, fam, st.generator_tables(), k)?.with_a_k(a_k));
        }
        let best = reports
            .iter()
            .filter(|r| r.lower_bound().is_some())
            .min_by(|a, b| a.theta.cmp(&b.theta));
        let exact = if opts.exact {
            let so = SearchOptions {
                budget: opts.budget,
                ..SearchOptions::default()
            };
            match h_exact(x, k, so) {
                Ok(r) => Some(r.value),
                Err(Error::BudgetExceeded { .. }) => None,
                Err(e) => return Err(e),
            }
        } else {
            None
        };
        let (mut bounds, failed_bound) =
            match crate::building_like::certified_bounds(n, k, Some(a_k), best, exact.as_ref()) {
                Ok(b) => (b, None),
                Err(bad) => (Vec::new(), Some(bad)),
            };
        let closed = family.closed_form_bounds(k, opts.budget)?;
        let failed_bound = failed_bound.or_else(|| {
            exact
                .as_ref()
                .and_then(|h| closed.iter().find(|c| !c.admits(h)).cloned())
        });
        bounds.extend(closed);
        levels.push(LevelReport {
            k,
            a_k,
            theta: reports.iter().map(|r| ThetaSummary::new(r, n)).collect(),
            bounds,
            exact,
            failed_bound,
        });
    }
    let passed = verify.passed()
        && filling.ok
        && levels
            .iter()
            .all(|l| l.failed_bound.is_none() && l.theta.iter().all(|t| t.within_gromov != Some(false)));
    Ok(CertifyReport {
        family,
        kmax,
        verify,
        filling,
        levels,
        passed,
    })
}
