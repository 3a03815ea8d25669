//! Parameter sweeps over generator families, one CSV row per instance.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::time::Instant;

use congestion_core::bounds::SpectralSummary;
use congestion_core::clustering::balance_epsilon;
use congestion_core::contraction::{
    congestion, hsc, hybrid_sc_equipartition, oracle_min_congestion, recursive_equipartition,
    root_balance, ORACLE_DEFAULT_LIMIT,
};
use congestion_core::generators::{Family, GenSpec, RqcTerminals, RNG_ALGORITHM};
use congestion_core::Graph;
use rayon::prelude::*;

use crate::error::{LabError, LabResult};

/// Reseeding budget when a random family must produce a connected graph.
pub const CONNECT_ATTEMPTS: usize = 1000;

/// Column order of the experiment CSV.
pub const HEADER: &[&str] = &[
    "family",
    "param_d",
    "param_m",
    "param_n",
    "param_p",
    "param_q",
    "param_depth",
    "param_k",
    "param_periodic",
    "param_terminals",
    "seed",
    "trial",
    "n",
    "m",
    "lambda2",
    "lambdan",
    "mu2",
    "mun",
    "eps",
    "lower_thm1",
    "upper_trivial",
    "upper_equi",
    "upper_hybrid",
    "lower_thm2",
    "upper_thm2_hybrid",
    "cng_hsc",
    "cng_hybrid",
    "cng_equi",
    "cng_oracle",
    "runtime_ms_spectra",
    "runtime_ms_hsc",
    "runtime_ms_hybrid",
    "runtime_ms_equi",
    "runtime_ms_oracle",
    "hyper_greedy",
    "cotengra_auto",
    "hyper_opt",
    "upper_thm2_trivial",
    "upper_thm2_equi",
    "max_degree",
    "eps_prime",
    "lower_gima",
    "lower_markov_shi",
    "gen_attempt",
    "rng",
];

/// Columns reserved for numbers produced by external contraction-order
/// optimizers; the harness leaves them empty.
pub const EXTERNAL_COLUMNS: &[&str] = &["hyper_greedy", "cotengra_auto", "hyper_opt"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Hypercube,
    Path,
    Cycle,
    Complete,
    Lattice,
    Rrg,
    Gnp,
    Rqc,
}

impl FamilyKind {
    pub fn parse(s: &str) -> LabResult<Self> {
        Ok(match s {
            "hypercube" => FamilyKind::Hypercube,
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "complete" => FamilyKind::Complete,
            "lattice" | "grid" => FamilyKind::Lattice,
            "rrg" | "random-regular" => FamilyKind::Rrg,
            "gnp" | "er" => FamilyKind::Gnp,
            "rqc" => FamilyKind::Rqc,
            other => return Err(LabError::Usage(format!("unknown family `{other}`"))),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Hypercube => "hypercube",
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::Lattice => "lattice",
            FamilyKind::Rrg => "rrg",
            FamilyKind::Gnp => "gnp",
            FamilyKind::Rqc => "rqc",
        }
    }
}

/// Inclusive integer range `a..b`, a single value, or a comma list.
pub fn parse_int_list(s: &str) -> LabResult<Vec<usize>> {
    let bad = || LabError::Usage(format!("bad integer range `{s}`"));
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(LabError::Usage(format!("empty range `{s}`")));
        }
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect()
}

pub fn parse_float_list(s: &str) -> LabResult<Vec<f64>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| LabError::Usage(format!("bad number list `{s}`")))
        })
        .collect()
}

/// Family parameters of one sweep point, flattened into CSV columns.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Params {
    pub d: Option<usize>,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub p: Option<f64>,
    pub q: Option<usize>,
    pub depth: Option<usize>,
    pub k: Option<usize>,
    pub periodic: Option<bool>,
    pub terminals: Option<RqcTerminals>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let ints = [
            ("d", self.d),
            ("m", self.m),
            ("n", self.n),
            ("q", self.q),
            ("depth", self.depth),
            ("k", self.k),
        ];
        for (key, v) in ints {
            if let Some(v) = v {
                parts.push(format!("{key}={v}"));
            }
        }
        if let Some(p) = self.p {
            parts.push(format!("p={p}"));
        }
        if let Some(b) = self.periodic {
            parts.push(format!("periodic={b}"));
        }
        if let Some(t) = self.terminals {
            parts.push(format!("terminals={}", terminals_name(t)));
        }
        write!(f, "{}", parts.join(" "))
    }
}

pub fn terminals_name(t: RqcTerminals) -> &'static str {
    match t {
        RqcTerminals::PerQubit => "per-qubit",
        RqcTerminals::Single => "single",
    }
}

pub fn parse_terminals(s: &str) -> LabResult<RqcTerminals> {
    match s {
        "per-qubit" => Ok(RqcTerminals::PerQubit),
        "single" => Ok(RqcTerminals::Single),
        other => Err(LabError::Usage(format!(
            "unknown terminals `{other}` (per-qubit|single)"
        ))),
    }
}

/// A sweep: family plus a value list per parameter.
#[derive(Debug, Clone)]
pub struct Sweep {
    pub family: FamilyKind,
    pub d: Vec<usize>,
    pub m: Vec<usize>,
    pub n: Vec<usize>,
    pub p: Vec<f64>,
    pub q: Vec<usize>,
    pub depth: Vec<usize>,
    pub k: Vec<usize>,
    pub periodic: bool,
    pub terminals: RqcTerminals,
}

impl Sweep {
    pub fn new(family: FamilyKind) -> Self {
        Sweep {
            family,
            d: Vec::new(),
            m: Vec::new(),
            n: Vec::new(),
            p: Vec::new(),
            q: Vec::new(),
            depth: Vec::new(),
            k: Vec::new(),
            periodic: false,
            terminals: RqcTerminals::PerQubit,
        }
    }

    fn need<'a, T>(values: &'a [T], flag: &str, family: FamilyKind) -> LabResult<&'a [T]> {
        if values.is_empty() {
            Err(LabError::Usage(format!(
                "family {} needs --{flag}",
                family.name()
            )))
        } else {
            Ok(values)
        }
    }

    /// Sweep points in output order. Random-regular points with `n·d` odd
    /// or `d >= n` are skipped.
    pub fn points(&self) -> LabResult<Vec<(Family, Params)>> {
        let fam = self.family;
        let mut out = Vec::new();
        match fam {
            FamilyKind::Hypercube => {
                for &d in Self::need(&self.d, "d", fam)? {
                    out.push((
                        Family::Hypercube { d: d as u32 },
                        Params {
                            d: Some(d),
                            ..Params::default()
                        },
                    ));
                }
            }
            FamilyKind::Path | FamilyKind::Cycle | FamilyKind::Complete => {
                for &k in Self::need(&self.n, "n", fam)? {
                    let family = match fam {
                        FamilyKind::Path => Family::Path { k },
                        FamilyKind::Cycle => Family::Cycle { k },
                        _ => Family::Complete { k },
                    };
                    out.push((
                        family,
                        Params {
                            n: Some(k),
                            ..Params::default()
                        },
                    ));
                }
            }
            FamilyKind::Lattice => {
                for &m in Self::need(&self.m, "m", fam)? {
                    for &n in Self::need(&self.n, "n", fam)? {
                        let periodic = self.periodic;
                        out.push((
                            Family::Grid { m, n, periodic },
                            Params {
                                m: Some(m),
                                n: Some(n),
                                periodic: Some(periodic),
                                ..Params::default()
                            },
                        ));
                    }
                }
            }
            FamilyKind::Rrg => {
                for &d in Self::need(&self.d, "d", fam)? {
                    for &n in Self::need(&self.n, "n", fam)? {
                        if (n * d) % 2 == 1 || d >= n {
                            continue;
                        }
                        out.push((
                            Family::RandomRegular { n, d },
                            Params {
                                d: Some(d),
                                n: Some(n),
                                ..Params::default()
                            },
                        ));
                    }
                }
            }
            FamilyKind::Gnp => {
                for &p in Self::need(&self.p, "p", fam)? {
                    for &n in Self::need(&self.n, "n", fam)? {
                        out.push((
                            Family::Gnp { n, p },
                            Params {
                                n: Some(n),
                                p: Some(p),
                                ..Params::default()
                            },
                        ));
                    }
                }
            }
            FamilyKind::Rqc => {
                for &k in Self::need(&self.k, "k", fam)? {
                    for &q in Self::need(&self.q, "q", fam)? {
                        for &depth in Self::need(&self.depth, "depth", fam)? {
                            let terminals = self.terminals;
                            out.push((
                                Family::Rqc {
                                    q,
                                    depth,
                                    k,
                                    terminals,
                                },
                                Params {
                                    q: Some(q),
                                    depth: Some(depth),
                                    k: Some(k),
                                    terminals: Some(terminals),
                                    ..Params::default()
                                },
                            ));
                        }
                    }
                }
            }
        }
        if out.is_empty() {
            return Err(LabError::Usage(
                "sweep has no valid parameter points".into(),
            ));
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub trials: usize,
    pub seed: u64,
    pub oracle: bool,
    pub oracle_limit: usize,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            trials: 1,
            seed: 0,
            oracle: false,
            oracle_limit: ORACLE_DEFAULT_LIMIT,
            timings: false,
        }
    }
}

/// Per-phase wall-clock times in milliseconds.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Timings {
    pub spectra: f64,
    pub hsc: f64,
    pub hybrid: f64,
    pub equi: f64,
    pub oracle: Option<f64>,
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub family: FamilyKind,
    pub params: Params,
    pub seed: u64,
    pub trial: usize,
    pub n: usize,
    pub m: f64,
    pub max_degree: f64,
    pub lambda2: f64,
    pub lambdan: f64,
    pub mu2: f64,
    pub mun: f64,
    pub eps: f64,
    pub eps_prime: f64,
    pub lower_thm1: f64,
    pub upper_trivial: f64,
    pub upper_equi: f64,
    pub upper_hybrid: f64,
    pub lower_thm2: f64,
    pub upper_thm2_trivial: f64,
    pub upper_thm2_equi: f64,
    pub upper_thm2_hybrid: f64,
    pub lower_gima: f64,
    pub lower_markov_shi: f64,
    pub cng_hsc: f64,
    pub cng_hybrid: f64,
    pub cng_equi: f64,
    pub cng_oracle: Option<f64>,
    pub gen_attempt: usize,
    pub timings: Option<Timings>,
}

fn ms_since(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Measures one connected graph. `seed` drives k-means inside HSC.
#[allow(clippy::too_many_arguments)]
pub fn measure(
    g: &Graph,
    family: FamilyKind,
    params: Params,
    seed: u64,
    trial: usize,
    gen_attempt: usize,
    cfg: &RunConfig,
) -> LabResult<Record> {
    let hsc_seed = seed.wrapping_add(trial as u64);
    let t = Instant::now();
    let s = SpectralSummary::of(g)?;
    let eps = balance_epsilon(g, false)?;
    let eps_prime = balance_epsilon(g, true)?;
    let spectra_ms = ms_since(t);

    let t = Instant::now();
    let cng_hsc = congestion(g, &hsc(g, hsc_seed, false)?)?.congestion;
    let hsc_ms = ms_since(t);

    let t = Instant::now();
    let hybrid = hybrid_sc_equipartition(g, false)?;
    let cng_hybrid = congestion(g, &hybrid)?.congestion;
    let hybrid_norm = hybrid_sc_equipartition(g, true)?;
    let hybrid_ms = ms_since(t);

    let t = Instant::now();
    let cng_equi = congestion(g, &recursive_equipartition(g)?)?.congestion;
    let equi_ms = ms_since(t);

    let (cng_oracle, oracle_ms) = if cfg.oracle && g.n() <= cfg.oracle_limit {
        let t = Instant::now();
        let v = oracle_min_congestion(g, cfg.oracle_limit)?;
        (Some(v), Some(ms_since(t)))
    } else {
        (None, None)
    };

    let (lower_thm2, upper_thm2_trivial, upper_thm2_equi, upper_thm2_hybrid) =
        s.thm2_bounds(root_balance(&hybrid_norm))?;
    let (lower_gima, lower_markov_shi) = s.prior_lower_bounds();
    Ok(Record {
        family,
        params,
        seed,
        trial,
        n: s.n,
        m: s.m,
        max_degree: s.max_degree,
        lambda2: s.lambda2,
        lambdan: s.lambda_n,
        mu2: s.mu2.unwrap_or(0.0),
        mun: s.mu_n.unwrap_or(0.0),
        eps,
        eps_prime,
        lower_thm1: s.thm1_lower(),
        upper_trivial: s.thm1_upper_trivial(),
        upper_equi: s.thm1_upper_equi(),
        upper_hybrid: s.thm1_upper_hybrid(root_balance(&hybrid))?,
        lower_thm2,
        upper_thm2_trivial,
        upper_thm2_equi,
        upper_thm2_hybrid,
        lower_gima,
        lower_markov_shi,
        cng_hsc,
        cng_hybrid,
        cng_equi,
        cng_oracle,
        gen_attempt,
        timings: cfg.timings.then_some(Timings {
            spectra: spectra_ms,
            hsc: hsc_ms,
            hybrid: hybrid_ms,
            equi: equi_ms,
            oracle: oracle_ms,
        }),
    })
}

impl Record {
    /// Inequalities every row must satisfy before it is written.
    pub fn check(&self) -> Result<(), String> {
        let heuristics = [
            ("cng_hsc", self.cng_hsc),
            ("cng_hybrid", self.cng_hybrid),
            ("cng_equi", self.cng_equi),
        ];
        let all = heuristics
            .iter()
            .copied()
            .chain(self.cng_oracle.map(|v| ("cng_oracle", v)));
        for (name, v) in all {
            if v < self.lower_thm1 - 1e-6 {
                return Err(format!(
                    "{name} = {v} < lower_thm1 = {} (trial {})",
                    self.lower_thm1, self.trial
                ));
            }
        }
        if let Some(o) = self.cng_oracle {
            for (name, v) in heuristics {
                if o > v + 1e-9 {
                    return Err(format!(
                        "cng_oracle = {o} > {name} = {v} (trial {})",
                        self.trial
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn to_row(&self) -> Vec<String> {
        let p = &self.params;
        let int = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        let real = |v: Option<f64>| v.map(fmt_sig).unwrap_or_default();
        let t = self.timings;
        let row = vec![
            self.family.name().to_string(),
            int(p.d),
            int(p.m),
            int(p.n),
            real(p.p),
            int(p.q),
            int(p.depth),
            int(p.k),
            p.periodic.map(|b| b.to_string()).unwrap_or_default(),
            p.terminals
                .map(|t| terminals_name(t).to_string())
                .unwrap_or_default(),
            self.seed.to_string(),
            self.trial.to_string(),
            self.n.to_string(),
            fmt_sig(self.m),
            fmt_sig(self.lambda2),
            fmt_sig(self.lambdan),
            fmt_sig(self.mu2),
            fmt_sig(self.mun),
            fmt_sig(self.eps),
            fmt_sig(self.lower_thm1),
            fmt_sig(self.upper_trivial),
            fmt_sig(self.upper_equi),
            fmt_sig(self.upper_hybrid),
            fmt_sig(self.lower_thm2),
            fmt_sig(self.upper_thm2_hybrid),
            fmt_sig(self.cng_hsc),
            fmt_sig(self.cng_hybrid),
            fmt_sig(self.cng_equi),
            real(self.cng_oracle),
            real(t.map(|t| t.spectra)),
            real(t.map(|t| t.hsc)),
            real(t.map(|t| t.hybrid)),
            real(t.map(|t| t.equi)),
            real(t.and_then(|t| t.oracle)),
            String::new(),
            String::new(),
            String::new(),
            fmt_sig(self.upper_thm2_trivial),
            fmt_sig(self.upper_thm2_equi),
            fmt_sig(self.max_degree),
            fmt_sig(self.eps_prime),
            fmt_sig(self.lower_gima),
            fmt_sig(self.lower_markov_shi),
            self.gen_attempt.to_string(),
            RNG_ALGORITHM.to_string(),
        ];
        debug_assert_eq!(row.len(), HEADER.len());
        row
    }
}

/// `x` with 12 significant digits, trailing zeros dropped (`%.12g`).
pub fn fmt_sig(x: f64) -> String {
    fmt_digits(x, 12)
}

/// `%g`-style formatting with `digits` significant digits.
pub fn fmt_digits(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..digits as i32).contains(&exp) {
        trim_zeros(format!("{:.*}", (digits as i32 - 1 - exp) as usize, x))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Runs every (point, trial) pair, in parallel, and returns the rows in
/// point-major, trial-minor order. Each row is checked before returning.
pub fn run_sweep(sweep: &Sweep, cfg: &RunConfig) -> LabResult<Vec<Record>> {
    if cfg.trials == 0 {
        return Err(LabError::Usage("--trials must be at least 1".into()));
    }
    let points = sweep.points()?;
    let jobs: Vec<(usize, usize)> = (0..points.len())
        .flat_map(|i| (0..cfg.trials).map(move |t| (i, t)))
        .collect();
    let rows: Vec<LabResult<Record>> = jobs
        .par_iter()
        .map(|&(i, trial)| {
            let (family, params) = &points[i];
            let spec = GenSpec::new(family.clone(), cfg.seed.wrapping_add(trial as u64));
            let (g, attempt) = spec.generate_connected(CONNECT_ATTEMPTS)?;
            measure(&g, sweep.family, *params, cfg.seed, trial, attempt, cfg)
        })
        .collect();
    let rows: Vec<Record> = rows.into_iter().collect::<LabResult<_>>()?;
    for r in &rows {
        r.check().map_err(LabError::Invariant)?;
    }
    Ok(rows)
}

pub fn write_csv(path: &Path, rows: &[Record]) -> LabResult<()> {
    let file = std::fs::File::create(path).map_err(|e| LabError::io(path, e))?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record(HEADER)?;
    for r in rows {
        w.write_record(r.to_row())?;
    }
    w.flush().map_err(|e| LabError::io(path, e))?;
    Ok(())
}

/// Mean and sample standard deviation (zero for a single value).
pub fn mean_sd(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// Columns summarized per sweep point.
pub const SUMMARY_FIELDS: &[&str] = &[
    "lower_thm1",
    "cng_hsc",
    "cng_hybrid",
    "cng_equi",
    "upper_equi",
    "cng_oracle",
];

fn field(r: &Record, name: &str) -> Option<f64> {
    Some(match name {
        "lower_thm1" => r.lower_thm1,
        "cng_hsc" => r.cng_hsc,
        "cng_hybrid" => r.cng_hybrid,
        "cng_equi" => r.cng_equi,
        "upper_equi" => r.upper_equi,
        "cng_oracle" => return r.cng_oracle,
        _ => return None,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub params: String,
    pub count: usize,
    /// `(field, mean, sd)` for each of [`SUMMARY_FIELDS`] with data.
    pub stats: Vec<(&'static str, f64, f64)>,
}

pub fn summarize(rows: &[Record]) -> Vec<SummaryRow> {
    let mut order = Vec::new();
    let mut groups: BTreeMap<String, Vec<&Record>> = BTreeMap::new();
    for r in rows {
        let key = r.params.to_string();
        if !groups.contains_key(&key) {
            order.push(key.clone());
        }
        groups.entry(key).or_default().push(r);
    }
    order
        .into_iter()
        .map(|key| {
            let group = &groups[&key];
            let stats = SUMMARY_FIELDS
                .iter()
                .filter_map(|&f| {
                    let xs: Vec<f64> = group.iter().filter_map(|r| field(r, f)).collect();
                    (!xs.is_empty()).then(|| {
                        let (m, s) = mean_sd(&xs);
                        (f, m, s)
                    })
                })
                .collect();
            SummaryRow {
                params: key,
                count: group.len(),
                stats,
            }
        })
        .collect()
}

impl fmt::Display for SummaryRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (trials={})", self.params, self.count)?;
        for (name, mean, sd) in &self.stats {
            write!(f, "  {name}={}±{}", fmt_sig(*mean), fmt_sig(*sd))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(fmt_sig(8.0), "8");
        assert_eq!(fmt_sig(32.0 / 9.0), "3.55555555556");
        assert_eq!(fmt_sig(-0.0), "0");
        assert_eq!(fmt_sig(1e-7), "1e-7");
        assert_eq!(fmt_sig(123456789012345.0), "1.23456789012e14");
        assert_eq!(fmt_sig(0.1 + 0.2), "0.3");
        assert_eq!(fmt_sig(99.99999999999999), "100");
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_int_list("10..13").unwrap(), vec![10, 11, 12, 13]);
        assert_eq!(parse_int_list("3,4").unwrap(), vec![3, 4]);
        assert_eq!(parse_int_list("5").unwrap(), vec![5]);
        assert_eq!(parse_int_list("2..=3").unwrap(), vec![2, 3]);
        assert!(parse_int_list("5..3").is_err());
        assert!(parse_int_list("a..3").is_err());
        assert_eq!(parse_float_list("0.15,0.2").unwrap(), vec![0.15, 0.2]);
    }

    #[test]
    fn rrg_points_skip_odd() {
        let mut s = Sweep::new(FamilyKind::Rrg);
        s.d = vec![3];
        s.n = parse_int_list("10..24").unwrap();
        assert_eq!(s.points().unwrap().len(), 8);
        s.n = vec![3];
        assert!(s.points().is_err());
    }

    #[test]
    fn sample_sd() {
        let (m, s) = mean_sd(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(m, 2.5);
        assert!((s - (5.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert_eq!(mean_sd(&[7.0]), (7.0, 0.0));
    }
}
