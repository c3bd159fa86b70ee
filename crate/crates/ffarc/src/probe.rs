//! Bound probing campaigns: random trials or every order of one instance.

use std::fmt::Write as _;

use ffarc_core::{
    properties::bound_verdicts, ff_color, load_profile, max_clique_with_limit, Geometry, Instance,
    PresentationOrder,
};
use itertools::Itertools;
use thiserror::Error;

use crate::campaign::{par_map, sample_instance, Kind};
use crate::gen::trial_seed;

/// Exhaustive sweeps enumerate `n!` orders.
pub const EXHAUSTIVE_MAX_N: usize = 8;

pub const CSV_HEADER: &str =
    "seed,order_index,n,M,omega,K,colors_used,bound_8w,bound_8wK,bound_9w,max_ratio";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeMode {
    Trials(usize),
    Exhaustive,
}

#[derive(Clone, Debug)]
pub struct ProbeParams {
    pub kind: Kind,
    pub n: usize,
    pub size: usize,
    pub seed: u64,
    pub mode: ProbeMode,
    pub jobs: usize,
    /// Fixed instance for exhaustive sweeps; generated from `seed` if absent.
    pub instance: Option<Instance>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProbeError {
    #[error("exhaustive sweep over {0} elements refused (limit {EXHAUSTIVE_MAX_N})")]
    TooManyOrders(usize),
    #[error("random trials need a generated instance; drop --instance or use --exhaustive")]
    InstanceWithTrials,
    #[error("domain size {0} is too small")]
    DomainTooSmall(usize),
    #[error(transparent)]
    Core(#[from] ffarc_core::Error),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeRow {
    pub seed: u64,
    pub order_index: usize,
    pub n: usize,
    pub size: usize,
    pub omega: usize,
    pub k: usize,
    pub colors_used: u32,
    pub bound_8w: usize,
    pub bound_8wk: usize,
    pub bound_9w: usize,
    /// Every applicable bound verdict passed.
    pub all_pass: bool,
}

impl ProbeRow {
    pub fn ratio(&self) -> f64 {
        if self.omega == 0 {
            0.0
        } else {
            self.colors_used as f64 / self.omega as f64
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ProbeReport {
    pub rows: Vec<ProbeRow>,
}

impl ProbeReport {
    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.all_pass).count()
    }

    pub fn max_colors_used(&self) -> u32 {
        self.rows.iter().map(|r| r.colors_used).max().unwrap_or(0)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.rows.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{:.4}",
                r.seed, r.order_index, r.n, r.size, r.omega, r.k, r.colors_used, r.bound_8w,
                r.bound_8wk, r.bound_9w, r.ratio()
            )
            .unwrap();
        }
        out
    }
}

struct Stats {
    circular: bool,
    omega: usize,
    k: usize,
}

fn stats(g: &Instance) -> Result<Stats, ffarc_core::Error> {
    let lp = load_profile(g);
    let omega = match g {
        Instance::Intervals(_) => lp.max_load,
        Instance::Arcs(_) => max_clique_with_limit(g, ffarc_core::analysis::MAX_CLIQUE_LIMIT)?.omega,
    };
    Ok(Stats { circular: g.is_circular(), omega, k: lp.min_load })
}

fn row(seed: u64, order_index: usize, g: &Instance, s: &Stats, order: &PresentationOrder) -> ProbeRow {
    let used = ff_color(g, order).expect("order matches instance").colors_used();
    let all_pass = bound_verdicts(s.circular, s.omega, s.k, used).iter().all(|v| v.satisfied);
    ProbeRow {
        seed,
        order_index,
        n: g.element_count(),
        size: g.domain_size(),
        omega: s.omega,
        k: s.k,
        colors_used: used,
        bound_8w: 8 * s.omega,
        bound_8wk: 8 * s.omega + s.k,
        bound_9w: 9 * s.omega,
        all_pass,
    }
}

/// Runs a campaign. Output is a deterministic function of the parameters;
/// `jobs` only changes wall-clock time.
pub fn probe(params: &ProbeParams) -> Result<ProbeReport, ProbeError> {
    if params.instance.is_none() && params.size < 2 {
        return Err(ProbeError::DomainTooSmall(params.size));
    }
    match params.mode {
        ProbeMode::Exhaustive => {
            let g = match &params.instance {
                Some(g) => g.clone(),
                None => sample_instance(params.seed, params.kind, params.n, params.size).0,
            };
            let n = g.element_count();
            if n > EXHAUSTIVE_MAX_N {
                return Err(ProbeError::TooManyOrders(n));
            }
            let s = stats(&g)?;
            let orders: Vec<Vec<usize>> = (0..n).permutations(n).collect();
            let rows = par_map(orders.len(), params.jobs, |i| {
                let order = PresentationOrder::new(orders[i].clone()).expect("permutation");
                row(params.seed, i, &g, &s, &order)
            });
            Ok(ProbeReport { rows })
        }
        ProbeMode::Trials(count) => {
            if params.instance.is_some() {
                return Err(ProbeError::InstanceWithTrials);
            }
            let results = par_map(count, params.jobs, |i| {
                let seed = trial_seed(params.seed, i as u64);
                let (g, order) = sample_instance(seed, params.kind, params.n, params.size);
                stats(&g).map(|s| row(seed, i, &g, &s, &order))
            });
            let rows = results.into_iter().collect::<Result<Vec<_>, _>>()?;
            Ok(ProbeReport { rows })
        }
    }
}
