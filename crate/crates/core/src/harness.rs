//! Verification campaigns: exact counts against the lower bounds, one record
//! per basis-graph edge.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{bound_2conn, catalan_lower, hc_lower, uniform_good_lower, uniform_lower};
use crate::error::{Error, Result};
use crate::graphic::pool::k_edge_connected_pool;
use crate::graphic::{recognize_exceptional, Exceptional, GraphicMatroid, Multigraph};
use crate::hamiltonian::{count_hc_dp_rooted, count_hc_through_edge, induced_symmetry, HcCount, DP_MAX_VERTICES};
use crate::latticepath::{CatalanMatroid, GenCatalan, Step, StepWord};
use crate::matroid::{good_cycles_bruteforce, BasisGraph, GoodCycle};
use crate::uniform::{UniformMatroid, UniformSpec};
use crate::witness::{witnesses_recursive, WitnessMatroid, WitnessPolicy, WitnessSet};

pub const REPORT_SCHEMA: &str = "basis-hc/report/1";

/// Basis-count ceilings per family: exact counting, then capped counting.
pub const GRAPHIC_EXACT_MAX: usize = 60;
pub const GRAPHIC_CAPPED_MAX: usize = 400;
pub const CATALAN_EXACT_MAX: usize = 14;
pub const CATALAN_CAPPED_MAX: usize = 132;
pub const UNIFORM_EXACT_MAX: usize = 20;
pub const UNIFORM_CAPPED_MAX: usize = 252;

/// Capped search refuses bounds above this.
pub const HC_CAP_MAX: u64 = 1_000_000;

/// Witness targets above this are not attempted.
pub const WITNESS_TARGET_MAX: u64 = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Graphic2,
    GraphicK,
    Catalan,
    Gencat,
    Uniform,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graphic2" => Ok(Family::Graphic2),
            "graphicK" | "graphick" => Ok(Family::GraphicK),
            "catalan" => Ok(Family::Catalan),
            "gencat" => Ok(Family::Gencat),
            "uniform" => Ok(Family::Uniform),
            _ => Err(Error::Parse(format!(
                "unknown family `{s}`; expected graphic2, graphicK, catalan, gencat or uniform"
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Graphic2 => "graphic2",
            Family::GraphicK => "graphicK",
            Family::Catalan => "catalan",
            Family::Gencat => "gencat",
            Family::Uniform => "uniform",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CapPolicy {
    /// Exact by DP on small graphs, search capped at the bound beyond.
    Auto,
    /// Exact counts only; refuses instances past the exact ceiling.
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "CAPPED-PASS")]
    CappedPass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::CappedPass => "CAPPED-PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// One concrete matroid with enough data to rebuild it.
#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    /// `k` is the edge-connectivity the bounds are taken at.
    Graphic { graph: Multigraph, k: usize },
    Catalan(usize),
    Gencat(GenCatalan),
    Uniform(UniformSpec),
}

impl Instance {
    pub fn family(&self) -> Family {
        match self {
            Instance::Graphic { k, .. } if *k <= 2 => Family::Graphic2,
            Instance::Graphic { .. } => Family::GraphicK,
            Instance::Catalan(_) => Family::Catalan,
            Instance::Gencat(_) => Family::Gencat,
            Instance::Uniform(_) => Family::Uniform,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Instance::Graphic { graph, k } => json!({"family": self.family().to_string(), "k": k, "graph": graph.to_json()}),
            Instance::Catalan(k) => json!({"family": "catalan", "k": k}),
            Instance::Gencat(m) => json!({"family": "gencat", "q": m.q().to_string()}),
            Instance::Uniform(s) => json!({"family": "uniform", "r": s.r, "n": s.n}),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("instance JSON: {m}"));
        let num = |key: &str| -> Result<usize> {
            v.get(key)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| bad(&format!("missing `{key}`")))
        };
        let family: Family = v.get("family").and_then(Value::as_str).ok_or_else(|| bad("missing `family`"))?.parse()?;
        Ok(match family {
            Family::Graphic2 | Family::GraphicK => Instance::Graphic {
                graph: Multigraph::from_json(v.get("graph").ok_or_else(|| bad("missing `graph`"))?)?,
                k: num("k")?,
            },
            Family::Catalan => Instance::Catalan(num("k")?),
            Family::Gencat => Instance::Gencat(v.get("q").and_then(Value::as_str).ok_or_else(|| bad("missing `q`"))?.parse()?),
            Family::Uniform => Instance::Uniform(UniformSpec::new(num("r")?, num("n")?)?),
        })
    }
}

/// The parameter grid of a campaign.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Grid {
    /// Pool graphs with `n_min <= n <= n_max` vertices, at most `m_max` edges,
    /// and edge-connectivity at least `k`.
    GraphicPool { n_min: usize, n_max: usize, m_max: usize, k: usize },
    Catalan { ks: Vec<usize> },
    /// Loop- and isthmus-free words of length `len_min..=len_max` with at
    /// most `max_bases` bases.
    Gencat { len_min: usize, len_max: usize, max_bases: usize },
    Uniform { specs: Vec<(usize, usize)> },
}

#[derive(Clone, Debug, Serialize)]
pub struct Campaign {
    pub family: Family,
    pub grid: Grid,
    pub cap: CapPolicy,
    pub seed: u64,
    /// Sample this many edges per instance instead of all of them.
    pub edges_per_instance: Option<usize>,
    pub witnesses: bool,
}

impl Campaign {
    pub fn new(family: Family, grid: Grid) -> Self {
        Campaign {
            family,
            grid,
            cap: CapPolicy::Auto,
            seed: 0,
            edges_per_instance: None,
            witnesses: true,
        }
    }

    pub fn instances(&self) -> Result<Vec<Instance>> {
        let out: Vec<Instance> = match &self.grid {
            Grid::GraphicPool { n_min, n_max, m_max, k } => {
                if *n_max > 6 || *m_max > 9 {
                    return Err(Error::ScaleExceeded(format!("graphic pool limited to n <= 6, m <= 9; got n <= {n_max}, m <= {m_max}")));
                }
                k_edge_connected_pool((*n_min).max(2), *n_max, *m_max, (*k).max(2))
                    .into_iter()
                    .map(|graph| {
                        let k = match self.family {
                            Family::Graphic2 => 2,
                            _ => graph.edge_connectivity(),
                        };
                        Instance::Graphic { graph, k }
                    })
                    .collect()
            }
            Grid::Catalan { ks } => ks.iter().map(|&k| Instance::Catalan(k)).collect(),
            Grid::Gencat { len_min, len_max, max_bases } => gencat_words(*len_min, *len_max, *max_bases)
                .into_iter()
                .map(Instance::Gencat)
                .collect(),
            Grid::Uniform { specs } => specs
                .iter()
                .map(|&(r, n)| UniformSpec::new(r, n).map(Instance::Uniform))
                .collect::<Result<_>>()?,
        };
        Ok(out)
    }

    pub fn run(&self) -> Result<Report> {
        let prepared: Vec<Prepared> = self
            .instances()?
            .into_par_iter()
            .map(|i| Prepared::new(i, self.cap))
            .collect::<Result<_>>()?;
        let mut tasks = Vec::new();
        for (idx, p) in prepared.iter().enumerate() {
            let mut edges = p.edges();
            if let Some(k) = self.edges_per_instance {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ (idx as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
                edges.shuffle(&mut rng);
                edges.truncate(k);
                edges.sort_unstable();
            }
            tasks.extend(edges.into_iter().map(|e| (idx, e)));
        }
        let records = tasks
            .par_iter()
            .map(|&(idx, edge)| prepared[idx].verify_edge(edge, self.cap, self.witnesses))
            .collect();
        Ok(Report { campaign: self.clone(), records })
    }
}

/// Loop- and isthmus-free generalized Catalan words, shortest first.
pub fn gencat_words(len_min: usize, len_max: usize, max_bases: usize) -> Vec<GenCatalan> {
    let mut out = Vec::new();
    for len in len_min.max(2)..=len_max {
        for mask in 0u32..(1 << len) {
            let steps = (0..len).map(|i| if mask >> (len - 1 - i) & 1 == 1 { Step::N } else { Step::E }).collect();
            let m = GenCatalan::new(StepWord::new(steps));
            if m.is_simple_form() && m.lpm().path_counts().0 <= max_bases as u128 {
                out.push(m);
            }
        }
    }
    out
}

/// A built matroid of any supported family.
pub enum Handle {
    Graphic { m: GraphicMatroid, k: usize, exceptional: Exceptional },
    Catalan(CatalanMatroid),
    Uniform(UniformMatroid),
}

impl Handle {
    pub fn basis_graph(&self) -> &BasisGraph {
        match self {
            Handle::Graphic { m, .. } => m.basis_graph(),
            Handle::Catalan(m) => m.basis_graph(),
            Handle::Uniform(m) => m.basis_graph(),
        }
    }

    pub fn good_cycles(&self, b1: usize, b2: usize) -> Result<Vec<GoodCycle>> {
        match self {
            Handle::Graphic { m, .. } => WitnessMatroid::good_cycles(m, b1, b2),
            Handle::Catalan(m) => WitnessMatroid::good_cycles(m, b1, b2),
            Handle::Uniform(m) => WitnessMatroid::good_cycles(m, b1, b2),
        }
    }

    pub fn witnesses(&self, edge: (usize, usize), policy: &WitnessPolicy) -> Result<WitnessSet> {
        match self {
            Handle::Graphic { m, .. } => witnesses_recursive(m, edge, policy),
            Handle::Catalan(m) => witnesses_recursive(m, edge, policy),
            Handle::Uniform(m) => witnesses_recursive(m, edge, policy),
        }
    }
}

impl Instance {
    pub fn build(&self) -> Result<Handle> {
        Ok(match self {
            Instance::Graphic { graph, k } => Handle::Graphic {
                m: GraphicMatroid::new(graph.clone())?,
                k: *k,
                exceptional: recognize_exceptional(graph),
            },
            Instance::Catalan(k) => Handle::Catalan(CatalanMatroid::new(GenCatalan::catalan(*k)?)),
            Instance::Gencat(gc) => Handle::Catalan(CatalanMatroid::new(gc.clone())),
            Instance::Uniform(spec) => Handle::Uniform(UniformMatroid::new(*spec)),
        })
    }
}

/// An instance with its basis graph built and its bounds evaluated.
pub struct Prepared {
    instance: Instance,
    handle: Handle,
    bound_good: usize,
    bound_hc: BigUint,
    // orbit representatives with orbit sizes, when a symmetry is certified
    orbits: Option<Vec<((usize, usize), usize)>>,
    // subset-DP results by root, shared by the edges at that root
    dp_cache: Mutex<HashMap<usize, Arc<BTreeMap<usize, u64>>>>,
}

fn limits(family: Family) -> (usize, usize) {
    match family {
        Family::Graphic2 | Family::GraphicK => (GRAPHIC_EXACT_MAX, GRAPHIC_CAPPED_MAX),
        Family::Catalan | Family::Gencat => (CATALAN_EXACT_MAX, CATALAN_CAPPED_MAX),
        Family::Uniform => (UNIFORM_EXACT_MAX, UNIFORM_CAPPED_MAX),
    }
}

fn fits_dp(h: &Handle) -> bool {
    h.basis_graph().vertex_count() <= DP_MAX_VERTICES
}

impl Prepared {
    pub fn new(instance: Instance, cap: CapPolicy) -> Result<Self> {
        let (exact_max, capped_max) = limits(instance.family());
        let ceiling = match cap {
            CapPolicy::Exact => exact_max,
            CapPolicy::Auto => capped_max,
        };
        let too_big = |bases: usize| {
            Error::ScaleExceeded(format!("{} has {bases} bases, ceiling {ceiling}", instance.to_json()))
        };
        let (handle, bound_good, bound_hc) = match &instance {
            Instance::Graphic { graph, k } => {
                let trees = crate::oracle::kirchhoff_tree_count(graph) as usize;
                if trees > ceiling {
                    return Err(too_big(trees));
                }
                let n = graph.vertex_count();
                let exceptional = recognize_exceptional(graph);
                let (bg, bh) = if *k <= 2 {
                    let good = if n >= 4 && exceptional == Exceptional::Neither { 2 } else { 0 };
                    (good, if n >= 3 { bound_2conn(n)? } else { BigUint::from(1u8) })
                } else {
                    ((n - 2) * (k - 1), hc_lower(n, *k)?.value)
                };
                let m = GraphicMatroid::new(graph.clone())?;
                (Handle::Graphic { m, k: *k, exceptional }, bg, bh)
            }
            Instance::Catalan(k) => {
                let gc = GenCatalan::catalan(*k)?;
                let size = gc.lpm().path_counts().0 as usize;
                if size > ceiling {
                    return Err(too_big(size));
                }
                let good = (gc.rank().min(gc.corank())).saturating_sub(1);
                (Handle::Catalan(CatalanMatroid::new(gc)), good, catalan_lower(*k)?.value)
            }
            Instance::Gencat(gc) => {
                let size = gc.lpm().path_counts().0 as usize;
                if size > ceiling {
                    return Err(too_big(size));
                }
                let good = (gc.rank().min(gc.corank())).saturating_sub(1);
                // edge-Hamiltonian is the only bound claimed for a general word
                (Handle::Catalan(CatalanMatroid::new(gc.clone())), good, BigUint::from(1u8))
            }
            Instance::Uniform(spec) => {
                let size = crate::bounds::binomial(spec.n as i64, spec.r as i64) as usize;
                if size > ceiling {
                    return Err(too_big(size));
                }
                let good = uniform_good_lower(spec.r, spec.n)?.as_u64().unwrap_or(0) as usize;
                (Handle::Uniform(UniformMatroid::new(*spec)), good, uniform_lower(spec.r, spec.n)?.value)
            }
        };
        if cap == CapPolicy::Auto && bound_hc > BigUint::from(HC_CAP_MAX) && !fits_dp(&handle) {
            return Err(Error::ScaleExceeded(format!("{}: bound {bound_hc} exceeds the search cap {HC_CAP_MAX}", instance.to_json())));
        }
        let orbits = match (&handle, &instance) {
            (Handle::Uniform(m), Instance::Uniform(spec)) => {
                let n = spec.n;
                let swap: Vec<usize> = (0..n).map(|x| match x {
                    0 => 1,
                    1 => 0,
                    _ => x,
                }).collect();
                let rot: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
                let cert = induced_symmetry(m.basis_graph(), &[swap, rot])?;
                Some(cert.edge_orbits(m.basis_graph()))
            }
            _ => None,
        };
        Ok(Prepared { instance, handle, bound_good, bound_hc, orbits, dp_cache: Mutex::default() })
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn basis_graph(&self) -> &BasisGraph {
        self.handle.basis_graph()
    }

    pub fn handle(&self) -> &Handle {
        &self.handle
    }

    pub fn bound_hc(&self) -> &BigUint {
        &self.bound_hc
    }

    pub fn bound_good(&self) -> usize {
        self.bound_good
    }

    /// The edges a campaign visits: orbit representatives if certified.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match &self.orbits {
            Some(o) => o.iter().map(|&(e, _)| e).collect(),
            None => self.basis_graph().edges(),
        }
    }

    pub fn template_cycles(&self, b1: usize, b2: usize) -> Result<Vec<GoodCycle>> {
        self.handle.good_cycles(b1, b2)
    }

    fn witnesses(&self, edge: (usize, usize), target: usize) -> Result<(usize, usize)> {
        let w = self.handle.witnesses(edge, &WitnessPolicy::new(target))?;
        Ok((w.len(), w.collisions))
    }

    fn dp_count(&self, u: usize, v: usize) -> Result<HcCount> {
        let cached = self.dp_cache.lock().expect("cache lock").get(&u).cloned();
        let counts = match cached {
            Some(c) => c,
            None => {
                let c = Arc::new(count_hc_dp_rooted(self.basis_graph().adjacency(), u)?);
                self.dp_cache.lock().expect("cache lock").insert(u, c.clone());
                c
            }
        };
        counts.get(&v).map(|&c| HcCount::exact(c)).ok_or(Error::NotAnEdge(u, v))
    }

    pub fn verify_edge(&self, edge: (usize, usize), cap: CapPolicy, witnesses: bool) -> VerificationRecord {
        let mut notes = Vec::new();
        let bg = self.basis_graph();
        let (u, v) = edge;
        let mut good = usize::MAX;
        let mut brute = usize::MAX;
        let mut sound = true;
        for (a, b) in [(u, v), (v, u)] {
            match (self.template_cycles(a, b), good_cycles_bruteforce(bg, a, b)) {
                (Ok(t), Ok(all)) => {
                    // templates may reorient the edge; check against that orientation
                    let oriented: BTreeSet<_> = match t.first() {
                        Some(c) if (c.b1, c.b2) != (a, b) => {
                            good_cycles_bruteforce(bg, c.b1, c.b2).unwrap_or_default().into_iter().map(|c| c.key()).collect()
                        }
                        _ => all.iter().map(|c| c.key()).collect(),
                    };
                    sound &= t.iter().all(|c| oriented.contains(&c.key()) && c.validate(bg).is_ok());
                    good = good.min(t.len());
                    brute = brute.min(all.len());
                }
                (Err(e), _) | (_, Err(e)) => {
                    notes.push(format!("good cycles: {e}"));
                    sound = false;
                    good = 0;
                }
            }
        }
        let cap_value = u64::try_from(&self.bound_hc).unwrap_or(u64::MAX);
        let hc = match (cap, bg.vertex_count() <= DP_MAX_VERTICES) {
            (_, true) => self.dp_count(u, v),
            (CapPolicy::Exact, false) => count_hc_through_edge(bg, u, v, None),
            (CapPolicy::Auto, false) => count_hc_through_edge(bg, u, v, Some(cap_value)),
        };
        let hc = match hc {
            Ok(h) => h,
            Err(e) => {
                notes.push(format!("count: {e}"));
                HcCount::exact(0)
            }
        };
        let mut witness_count = None;
        let mut witness_collisions = None;
        if witnesses && cap_value <= WITNESS_TARGET_MAX && bg.vertex_count() >= 3 {
            match self.witnesses(edge, cap_value as usize) {
                Ok((n, c)) => {
                    witness_count = Some(n);
                    witness_collisions = Some(c);
                }
                Err(e) => {
                    notes.push(format!("witnesses: {e}"));
                    witness_count = Some(0);
                }
            }
        }
        let hc_short = BigUint::from(hc.value) < self.bound_hc;
        let fail = !sound
            || good < self.bound_good
            || hc_short
            || witness_count.is_some_and(|w| (w as u64) < cap_value);
        let status = if fail {
            Status::Fail
        } else if hc.capped {
            Status::CappedPass
        } else {
            Status::Pass
        };
        VerificationRecord {
            instance: self.instance.to_json(),
            edge,
            good_cycle_count: good,
            brute_good_count: brute,
            templates_sound: sound,
            bound_good: self.bound_good,
            hc_count: hc,
            bound_hc: self.bound_hc.to_string(),
            witness_count,
            witness_collisions,
            status,
            notes,
        }
    }

    pub fn graphic_connectivity(&self) -> Option<(usize, Exceptional)> {
        match &self.handle {
            Handle::Graphic { k, exceptional, .. } => Some((*k, *exceptional)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationRecord {
    pub instance: Value,
    pub edge: (usize, usize),
    /// Fewest template good cycles over the two orientations of the edge.
    pub good_cycle_count: usize,
    /// Fewest good cycles of any kind over the two orientations.
    pub brute_good_count: usize,
    pub templates_sound: bool,
    pub bound_good: usize,
    pub hc_count: HcCount,
    pub bound_hc: String,
    pub witness_count: Option<usize>,
    pub witness_collisions: Option<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub campaign: Campaign,
    pub records: Vec<VerificationRecord>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub capped_pass: usize,
    pub fail: usize,
}

impl Report {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for r in &self.records {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::CappedPass => s.capped_pass += 1,
                Status::Fail => s.fail += 1,
            }
        }
        s
    }

    pub fn passed(&self) -> bool {
        self.summary().fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": REPORT_SCHEMA,
            "campaign": self.campaign,
            "summary": self.summary(),
            "records": self.records,
        })
    }
}

/// Re-checks a single record from its embedded instance and edge.
pub fn replay(record: &Value, cap: CapPolicy) -> Result<VerificationRecord> {
    let instance = Instance::from_json(record.get("instance").ok_or_else(|| Error::Parse("record lacks `instance`".into()))?)?;
    let edge = record
        .get("edge")
        .and_then(Value::as_array)
        .filter(|a| a.len() == 2)
        .and_then(|a| Some((a[0].as_u64()? as usize, a[1].as_u64()? as usize)))
        .ok_or_else(|| Error::Parse("record lacks a two-element `edge`".into()))?;
    let p = Prepared::new(instance, cap)?;
    if !p.basis_graph().has_edge(edge.0, edge.1) {
        return Err(Error::NotAnEdge(edge.0, edge.1));
    }
    Ok(p.verify_edge(edge, cap, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_campaign_passes() {
        let c = Campaign::new(Family::Uniform, Grid::Uniform { specs: vec![(2, 4), (2, 5), (3, 5)] });
        let r = c.run().unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        // J(n, r) is edge-transitive
        assert_eq!(r.records.len(), 3);
    }

    #[test]
    fn catalan_campaign_passes() {
        let r = Campaign::new(Family::Catalan, Grid::Catalan { ks: vec![2, 3] }).run().unwrap();
        assert!(r.passed());
        let edges: usize = [2, 3]
            .iter()
            .map(|&k| CatalanMatroid::new(GenCatalan::catalan(k).unwrap()).basis_graph().edge_count())
            .sum();
        assert_eq!(r.records.len(), edges);
    }

    #[test]
    fn deterministic_json() {
        let mut c = Campaign::new(Family::Graphic2, Grid::GraphicPool { n_min: 3, n_max: 4, m_max: 5, k: 2 });
        c.edges_per_instance = Some(2);
        c.seed = 7;
        let a = serde_json::to_string(&c.run().unwrap().to_json()).unwrap();
        let b = serde_json::to_string(&c.run().unwrap().to_json()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn replay_matches() {
        let r = Campaign::new(Family::Catalan, Grid::Catalan { ks: vec![3] }).run().unwrap();
        let rec = serde_json::to_value(&r.records[4]).unwrap();
        let again = replay(&rec, CapPolicy::Auto).unwrap();
        assert_eq!(serde_json::to_value(&again).unwrap(), rec);
    }

    #[test]
    fn scale_guard() {
        let c = Campaign::new(Family::Uniform, Grid::Uniform { specs: vec![(6, 12)] });
        assert!(matches!(c.run(), Err(Error::ScaleExceeded(_))));
        let mut c = Campaign::new(Family::Uniform, Grid::Uniform { specs: vec![(3, 7)] });
        c.cap = CapPolicy::Exact;
        assert!(matches!(c.run(), Err(Error::ScaleExceeded(_))));
        let c = Campaign::new(Family::Uniform, Grid::Uniform { specs: vec![(5, 10)] });
        assert!(matches!(c.run(), Err(Error::ScaleExceeded(_))));
    }

    #[test]
    fn instance_json_round_trip() {
        for i in [
            Instance::Catalan(3),
            Instance::Gencat("NNENEE".parse().unwrap()),
            Instance::Uniform(UniformSpec::new(2, 5).unwrap()),
            Instance::Graphic { graph: Multigraph::complete(4).unwrap(), k: 3 },
        ] {
            assert_eq!(Instance::from_json(&i.to_json()).unwrap(), i);
        }
    }
}
