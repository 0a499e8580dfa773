//! Finite set-cover engine: greedy, fractional (LP) and exact solvers.
//!
//! The greedy output carries a certificate against the fractional optimum:
//! a greedy cover always uses fewer than `(1 + ln(max set size)) * tau_star`
//! sets. All solvers are deterministic; greedy breaks ties by lowest
//! candidate id.

mod io;

pub use io::{format_instance, parse_instance, read_instance, SetCoverReport};

use crate::error::{CoverError, Result};
use crate::lp::{self, LpScalar, PackingProblem, Rational};

/// Finite covering hypergraph: ground elements and candidate sets.
///
/// Construction normalizes incidence lists (sorted, deduplicated) and keeps
/// the element -> candidates reverse index consistent with them. Elements
/// covered by no candidate are recorded rather than rejected; solvers report
/// `InfeasibleInstance` when asked to cover them.
#[derive(Debug, Clone)]
pub struct CoverInstance {
    ground_ids: Vec<u64>,
    set_ids: Vec<u64>,
    incidence: Vec<Vec<u32>>,
    reverse: Vec<Vec<u32>>,
    uncoverable: Vec<u32>,
}

impl CoverInstance {
    /// Builds an instance from external ids. Set members must be ground ids.
    pub fn new(ground_ids: Vec<u64>, sets: &[(u64, Vec<u64>)]) -> Result<Self> {
        let mut index = std::collections::HashMap::with_capacity(ground_ids.len());
        for (i, id) in ground_ids.iter().enumerate() {
            if index.insert(*id, i as u32).is_some() {
                return Err(CoverError::Parse(format!("duplicate ground id {id}")));
            }
        }
        let mut seen_sets = std::collections::HashSet::new();
        let mut set_ids = Vec::with_capacity(sets.len());
        let mut members = Vec::with_capacity(sets.len());
        for (sid, elems) in sets {
            if !seen_sets.insert(*sid) {
                return Err(CoverError::Parse(format!("duplicate set id {sid}")));
            }
            let mut list = Vec::with_capacity(elems.len());
            for e in elems {
                let Some(i) = index.get(e) else {
                    return Err(CoverError::Parse(format!("set {sid} references unknown element {e}")));
                };
                list.push(*i);
            }
            set_ids.push(*sid);
            members.push(list);
        }
        Ok(Self::build(ground_ids, set_ids, members))
    }

    /// Dense constructor: elements `0..n_elements`, set ids equal to indices.
    pub fn from_dense(n_elements: usize, sets: Vec<Vec<u32>>) -> Self {
        let ground_ids = (0..n_elements as u64).collect();
        let set_ids = (0..sets.len() as u64).collect();
        Self::build(ground_ids, set_ids, sets)
    }

    fn build(ground_ids: Vec<u64>, set_ids: Vec<u64>, mut members: Vec<Vec<u32>>) -> Self {
        let n = ground_ids.len();
        for list in &mut members {
            list.sort_unstable();
            list.dedup();
        }
        let mut reverse = vec![Vec::new(); n];
        for (s, list) in members.iter().enumerate() {
            for e in list {
                reverse[*e as usize].push(s as u32);
            }
        }
        let uncoverable =
            (0..n as u32).filter(|e| reverse[*e as usize].is_empty()).collect();
        CoverInstance { ground_ids, set_ids, incidence: members, reverse, uncoverable }
    }

    pub fn num_elements(&self) -> usize {
        self.ground_ids.len()
    }

    pub fn num_sets(&self) -> usize {
        self.set_ids.len()
    }

    pub fn ground_ids(&self) -> &[u64] {
        &self.ground_ids
    }

    pub fn set_ids(&self) -> &[u64] {
        &self.set_ids
    }

    pub fn members(&self, set: usize) -> &[u32] {
        &self.incidence[set]
    }

    pub fn covering_sets(&self, element: u32) -> &[u32] {
        &self.reverse[element as usize]
    }

    /// Largest candidate cardinality (the `max card H` of the certificate).
    pub fn max_set_cardinality(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Elements no candidate contains.
    pub fn uncoverable_elements(&self) -> &[u32] {
        &self.uncoverable
    }

    pub fn is_feasible(&self) -> bool {
        self.uncoverable.is_empty()
    }

    fn require_feasible(&self) -> Result<()> {
        if let Some(e) = self.uncoverable.first() {
            return Err(CoverError::InfeasibleInstance(format!(
                "element {} is contained in no candidate set",
                self.ground_ids[*e as usize]
            )));
        }
        Ok(())
    }
}

/// Ordered greedy selection with an optional fractional certificate.
#[derive(Debug, Clone)]
pub struct CoverSelection {
    /// Chosen candidate indices, in selection order.
    pub chosen: Vec<usize>,
    /// `(1 + ln(max set size)) * tau_star`, recorded when a fractional
    /// solution was available at solve time.
    pub certificate: Option<f64>,
}

impl CoverSelection {
    /// External ids of the chosen candidates.
    pub fn chosen_ids(&self, instance: &CoverInstance) -> Vec<u64> {
        self.chosen.iter().map(|s| instance.set_ids[*s]).collect()
    }

    /// Explicit union check against the ground set.
    pub fn covers(&self, instance: &CoverInstance) -> bool {
        let mut hit = vec![false; instance.num_elements()];
        for s in &self.chosen {
            for e in instance.members(*s) {
                hit[*e as usize] = true;
            }
        }
        hit.iter().all(|h| *h)
    }
}

/// Nonnegative candidate weights forming a fractional cover.
#[derive(Debug, Clone)]
pub struct FractionalWeights {
    /// Weight per candidate, indexed like the instance's sets.
    pub weights: Vec<f64>,
    /// Sum of the weights.
    pub total: f64,
}

impl FractionalWeights {
    /// Worst constraint violation: `max_e (1 - sum of weights covering e)`,
    /// clamped at zero when every element is fractionally covered.
    pub fn feasibility_violation(&self, instance: &CoverInstance) -> f64 {
        let mut worst = 0.0f64;
        for e in 0..instance.num_elements() as u32 {
            let cov: f64 =
                instance.covering_sets(e).iter().map(|s| self.weights[*s as usize]).sum();
            worst = worst.max(1.0 - cov);
        }
        worst
    }
}

/// Greedy set cover: repeatedly picks the candidate covering the most
/// uncovered elements, ties broken by lowest candidate id.
pub fn greedy_cover(instance: &CoverInstance) -> Result<CoverSelection> {
    instance.require_feasible()?;
    let n = instance.num_elements();
    if n == 0 {
        return Ok(CoverSelection { chosen: Vec::new(), certificate: None });
    }
    let m = instance.num_sets();
    let mut covered = vec![false; n];
    let mut remaining = n;
    let mut gain: Vec<usize> = (0..m).map(|s| instance.members(s).len()).collect();
    let mut chosen = Vec::new();
    while remaining > 0 {
        let mut best = 0usize;
        let mut best_gain = 0usize;
        for (s, g) in gain.iter().enumerate() {
            if *g > best_gain {
                best = s;
                best_gain = *g;
            }
        }
        if best_gain == 0 {
            // Feasibility was checked, so this cannot happen.
            return Err(CoverError::InfeasibleInstance("greedy stalled".into()));
        }
        chosen.push(best);
        for e in instance.members(best) {
            if !covered[*e as usize] {
                covered[*e as usize] = true;
                remaining -= 1;
                for s in instance.covering_sets(*e) {
                    gain[*s as usize] -= 1;
                }
            }
        }
    }
    Ok(CoverSelection { chosen, certificate: None })
}

/// Hard cap for the dense LP solver.
pub const LP_SIZE_CAP: usize = 500;

fn packing_rows<S: LpScalar>(instance: &CoverInstance) -> Vec<Vec<(usize, S)>> {
    (0..instance.num_sets())
        .map(|s| instance.members(s).iter().map(|e| (*e as usize, S::one())).collect())
        .collect()
}

/// Fractional covering optimum by the dense simplex, through the packing
/// dual. Instances above `LP_SIZE_CAP` per side are refused.
pub fn fractional_cover_lp(instance: &CoverInstance, tol: f64) -> Result<FractionalWeights> {
    if tol <= 0.0 {
        return Err(CoverError::BadParam("tol must be positive".into()));
    }
    instance.require_feasible()?;
    if instance.num_elements() == 0 {
        return Ok(FractionalWeights { weights: vec![0.0; instance.num_sets()], total: 0.0 });
    }
    if instance.num_elements() > LP_SIZE_CAP || instance.num_sets() > LP_SIZE_CAP {
        return Err(CoverError::SizeLimitExceeded(format!(
            "{} x {} exceeds the {} dense-solver cap",
            instance.num_elements(),
            instance.num_sets(),
            LP_SIZE_CAP
        )));
    }
    let rows = packing_rows::<f64>(instance);
    let rhs = vec![1.0; instance.num_sets()];
    let objective = vec![1.0; instance.num_elements()];
    let p = PackingProblem { num_vars: instance.num_elements(), rows: &rows, rhs: &rhs, objective: &objective };
    let sol = lp::solve_packing(&p)?;
    let weights: Vec<f64> = sol.multipliers.iter().map(|w| w.max(0.0)).collect();
    let fw = FractionalWeights { weights, total: sol.objective };
    debug_assert!(fw.feasibility_violation(instance) <= tol);
    Ok(fw)
}

/// Exact-rational variant of [`fractional_cover_lp`]; returns the weights in
/// floating point together with the exact optimum.
pub fn fractional_cover_lp_exact(instance: &CoverInstance) -> Result<(FractionalWeights, Rational)> {
    instance.require_feasible()?;
    if instance.num_elements() == 0 {
        return Ok((
            FractionalWeights { weights: vec![0.0; instance.num_sets()], total: 0.0 },
            num::Zero::zero(),
        ));
    }
    if instance.num_elements() > LP_SIZE_CAP || instance.num_sets() > LP_SIZE_CAP {
        return Err(CoverError::SizeLimitExceeded("instance exceeds dense-solver cap".into()));
    }
    let rows = packing_rows::<Rational>(instance);
    let one: Rational = num::One::one();
    let rhs = vec![one.clone(); instance.num_sets()];
    let objective = vec![one; instance.num_elements()];
    let p = PackingProblem { num_vars: instance.num_elements(), rows: &rows, rhs: &rhs, objective: &objective };
    let sol = lp::solve_packing(&p)?;
    let weights: Vec<f64> = sol.multipliers.iter().map(|w| w.to_f64().max(0.0)).collect();
    let total = sol.objective.to_f64();
    Ok((FractionalWeights { weights, total }, sol.objective))
}

/// Feasible (generally suboptimal) fractional cover with one uniform weight:
/// `1 / min_e card{S : e in S}` on every candidate. Its total upper-bounds
/// `tau_star` on instances too large for the LP.
pub fn uniform_fractional_cover(instance: &CoverInstance) -> Result<FractionalWeights> {
    instance.require_feasible()?;
    if instance.num_elements() == 0 {
        return Ok(FractionalWeights { weights: vec![0.0; instance.num_sets()], total: 0.0 });
    }
    let min_cov = (0..instance.num_elements() as u32)
        .map(|e| instance.covering_sets(e).len())
        .min()
        .unwrap_or(0);
    let w = 1.0 / min_cov as f64;
    let m = instance.num_sets();
    Ok(FractionalWeights { weights: vec![w; m], total: w * m as f64 })
}

/// Minimum cover cardinality by branch and bound.
///
/// The search branches on the uncovered element with the fewest candidates
/// and prunes with the LP lower bound at the root plus a combinatorial bound
/// per node. `size_cap` bounds the acceptable answer; proving `tau` would
/// exceed it (or refusing an unbounded search on a wide instance) yields
/// `SizeLimitExceeded`.
pub fn exact_cover_bruteforce(instance: &CoverInstance, size_cap: usize) -> Result<usize> {
    instance.require_feasible()?;
    let n = instance.num_elements();
    if n == 0 {
        return Ok(0);
    }
    if instance.num_sets() > 40 && size_cap > 30 {
        return Err(CoverError::SizeLimitExceeded(
            "more than 40 sets requires a bounding size_cap <= 30".into(),
        ));
    }
    let greedy = greedy_cover(instance)?.chosen.len();
    let mut best = greedy.min(size_cap + 1);

    // Root LP bound: tau >= ceil(tau_star - eps). If greedy already meets it
    // the search is over before it starts.
    let root_lb = match fractional_cover_lp(instance, 1e-9) {
        Ok(fw) => (fw.total - 1e-6).ceil() as usize,
        Err(CoverError::SizeLimitExceeded(_)) => 1,
        Err(e) => return Err(e),
    };
    if best <= root_lb {
        return finish_bruteforce(best, size_cap);
    }

    let mut covered = vec![0u32; n];
    let mut banned = vec![false; instance.num_sets()];
    let mut state = Search { instance, best: &mut best, root_lb };
    state.dfs(&mut covered, n, 0, &mut banned);
    finish_bruteforce(best, size_cap)
}

fn finish_bruteforce(best: usize, size_cap: usize) -> Result<usize> {
    if best > size_cap {
        Err(CoverError::SizeLimitExceeded(format!(
            "minimum cover exceeds size cap {size_cap}"
        )))
    } else {
        Ok(best)
    }
}

struct Search<'a> {
    instance: &'a CoverInstance,
    best: &'a mut usize,
    root_lb: usize,
}

impl Search<'_> {
    fn dfs(&mut self, covered: &mut [u32], uncovered: usize, depth: usize, banned: &mut [bool]) {
        if uncovered == 0 {
            *self.best = (*self.best).min(depth);
            return;
        }
        if depth + 1 >= *self.best {
            return;
        }
        // Cheap lower bound: every further set covers at most max_card new.
        let max_card = self.instance.max_set_cardinality().max(1);
        if depth + uncovered.div_ceil(max_card) >= *self.best {
            return;
        }
        if *self.best <= self.root_lb {
            return;
        }
        // Branch on the uncovered element with fewest usable candidates.
        let mut pivot_elem = u32::MAX;
        let mut pivot_count = usize::MAX;
        for e in 0..covered.len() as u32 {
            if covered[e as usize] > 0 {
                continue;
            }
            let count = self
                .instance
                .covering_sets(e)
                .iter()
                .filter(|s| !banned[**s as usize])
                .count();
            if count == 0 {
                return; // dead branch: banned sets were its only cover
            }
            if count < pivot_count {
                pivot_count = count;
                pivot_elem = e;
            }
        }
        // Order candidates by how many uncovered elements they add.
        let mut cands: Vec<(usize, u32)> = self
            .instance
            .covering_sets(pivot_elem)
            .iter()
            .filter(|s| !banned[**s as usize])
            .map(|s| {
                let gain = self
                    .instance
                    .members(*s as usize)
                    .iter()
                    .filter(|e| covered[**e as usize] == 0)
                    .count();
                (gain, *s)
            })
            .collect();
        cands.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut newly_banned = Vec::new();
        for (_, s) in cands {
            let mut newly = 0usize;
            for e in self.instance.members(s as usize) {
                covered[*e as usize] += 1;
                if covered[*e as usize] == 1 {
                    newly += 1;
                }
            }
            self.dfs(covered, uncovered - newly, depth + 1, banned);
            for e in self.instance.members(s as usize) {
                covered[*e as usize] -= 1;
            }
            // Later branches may not reuse this set: some cover must take
            // the first unbanned candidate of the pivot element.
            banned[s as usize] = true;
            newly_banned.push(s);
            if *self.best <= self.root_lb {
                break;
            }
        }
        for s in newly_banned {
            banned[s as usize] = false;
        }
    }
}

/// Report of the greedy-vs-fractional certificate on one instance.
#[derive(Debug, Clone, serde::Serialize)]
pub struct LsReport {
    pub greedy_size: usize,
    pub tau_star: f64,
    /// True when `tau_star` came from the uniform fallback (instance above
    /// the LP cap) and is only an upper bound on the fractional optimum.
    pub tau_star_is_upper_bound: bool,
    pub max_deg: usize,
    pub bound: f64,
    pub holds: bool,
}

/// Checks `greedy < (1 + ln(max set size)) * tau_star` (strict).
///
/// Degenerate instances (max set size 1 with integral optimum) can violate
/// strictness; the violation is flagged through `holds`, never panicked on.
pub fn verify_ls_bound(instance: &CoverInstance) -> Result<LsReport> {
    instance.require_feasible()?;
    let selection = greedy_cover(instance)?;
    let greedy_size = selection.chosen.len();
    let max_deg = instance.max_set_cardinality();
    if instance.num_elements() == 0 {
        return Ok(LsReport {
            greedy_size: 0,
            tau_star: 0.0,
            tau_star_is_upper_bound: false,
            max_deg,
            bound: 0.0,
            holds: true,
        });
    }
    let (tau_star, is_ub) = match fractional_cover_lp(instance, 1e-9) {
        Ok(fw) => (fw.total, false),
        Err(CoverError::SizeLimitExceeded(_)) => {
            (uniform_fractional_cover(instance)?.total, true)
        }
        Err(e) => return Err(e),
    };
    let bound = (1.0 + (max_deg as f64).ln()) * tau_star;
    Ok(LsReport {
        greedy_size,
        tau_star,
        tau_star_is_upper_bound: is_ub,
        max_deg,
        bound,
        holds: (greedy_size as f64) < bound,
    })
}

/// The Fano plane: 7 points, 7 lines of 3 points. A standard fixture with
/// tau = 3 and tau_star = 7/3.
pub fn fano_instance() -> CoverInstance {
    let lines: Vec<Vec<u32>> = vec![
        vec![0, 1, 2],
        vec![0, 3, 4],
        vec![0, 5, 6],
        vec![1, 3, 5],
        vec![1, 4, 6],
        vec![2, 3, 6],
        vec![2, 4, 5],
    ];
    CoverInstance::from_dense(7, lines)
}

/// Seeded random feasible instance used by benchmarks and the verification
/// sweep. Set sizes are drawn so exact search stays tractable.
pub fn random_instance(n_elements: usize, n_sets: usize, seed: u64) -> CoverInstance {
    use rand::Rng;
    let mut rng = crate::rng::stream(seed, "instance");
    let mut sets = Vec::with_capacity(n_sets);
    let lo = (n_elements / 6).max(2).min(n_elements);
    let hi = (n_elements / 2).max(lo + 1);
    for _ in 0..n_sets {
        let card = rng.random_range(lo..=hi).min(n_elements);
        let mut members: Vec<u32> = Vec::with_capacity(card);
        while members.len() < card {
            let e = rng.random_range(0..n_elements) as u32;
            if !members.contains(&e) {
                members.push(e);
            }
        }
        sets.push(members);
    }
    // Patch any uncovered element into a random set so the instance is
    // always feasible.
    let mut covered = vec![false; n_elements];
    for s in &sets {
        for e in s {
            covered[*e as usize] = true;
        }
    }
    for (e, c) in covered.iter().enumerate() {
        if !c {
            let s = rng.random_range(0..n_sets);
            sets[s].push(e as u32);
        }
    }
    CoverInstance::from_dense(n_elements, sets)
}

#[cfg(test)]
mod tests;
