//! Named verification checks behind `verify-theorems` and the acceptance
//! tests: equivalence scans between the manipulation search, the dominance
//! scan, and the basis/monotonicity conditions; decomposition round-trips;
//! strategy-proofness of sampled constructions; the shipped fixture; strict
//! subdomain enumerations; and structural invariants.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::committees::{enumerate_committees, ExtendedCommittee};
use crate::decompose::decompose;
use crate::dominance::{compatibility_witness, dominates, is_compatible};
use crate::error::{Error, Result};
use crate::orders::{Alternative, PairOrder, WeakOrder};
use crate::profiles::{
    equivalence_set, indifference_set, supporters, PartialProfile, Profile, ProfileSpace, Voter,
    VoterSet,
};
use crate::psi::{
    find_strict_dictator, random_spec, strict_committee_scf, strict_ranks, StrictScf,
};
use crate::scf::{
    csp_witness, is_csp, is_essentially_based_and_monotonic, is_weak_pareto, OrderDomain, ScfTable,
};

/// Largest profile count for which enumerating all `2^n` pair tables stays
/// at desk scale (8192 tables at the cap).
pub const MAX_EXHAUSTIVE_PROFILES: usize = 13;

/// Outcome of one named check: whether it held and a short account of what
/// was examined, or of the first violation found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

impl CheckReport {
    fn pass(name: &'static str, details: String) -> Self {
        Self {
            name,
            passed: true,
            details,
        }
    }

    fn fail(name: &'static str, details: String) -> Self {
        Self {
            name,
            passed: false,
            details,
        }
    }
}

/// Results of a full suite run at one scale.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub num_voters: usize,
    pub num_alternatives: usize,
    pub seed: u64,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

/// Every table into `{a, b}` over the space that attains both values.
pub fn onto_pair_tables(
    space: &Arc<ProfileSpace>,
    a: Alternative,
    b: Alternative,
) -> Result<Vec<ScfTable>> {
    if a == b {
        return Err(Error::domain("pair must be two distinct alternatives"));
    }
    let n = space.num_profiles();
    if n > MAX_EXHAUSTIVE_PROFILES {
        return Err(Error::resource(format!(
            "enumerating 2^{n} tables is out of reach; the cap is 2^{MAX_EXHAUSTIVE_PROFILES}"
        )));
    }
    let all = 1u32 << n;
    let mut out = Vec::with_capacity(all as usize - 2);
    for mask in 1..all - 1 {
        let values = (0..n)
            .map(|i| if mask >> i & 1 == 1 { b } else { a })
            .collect();
        out.push(ScfTable::new(Arc::clone(space), values)?);
    }
    Ok(out)
}

/// Exhaustive three-way agreement over every onto `{a, b}` table: the
/// coalitional manipulation search, the dominance scan, and the
/// basis/monotonicity conditions must classify each table identically.
pub fn equivalence_exhaustive(
    space: &Arc<ProfileSpace>,
    a: Alternative,
    b: Alternative,
) -> Result<CheckReport> {
    let name = "characterization-equivalence";
    let tables = onto_pair_tables(space, a, b)?;
    let mut csp_count = 0usize;
    for (k, f) in tables.iter().enumerate() {
        let by_search = is_csp(f);
        let by_dominance = is_compatible(f, a, b)?;
        let by_conditions = is_essentially_based_and_monotonic(f, a, b)?;
        if by_search != by_dominance || by_search != by_conditions {
            return Ok(CheckReport::fail(
                name,
                format!(
                    "onto table {k}: manipulation search {by_search}, dominance scan \
                     {by_dominance}, basis/monotonicity conditions {by_conditions}"
                ),
            ));
        }
        if by_search {
            csp_count += 1;
        }
    }
    Ok(CheckReport::pass(
        name,
        format!(
            "{} onto tables enumerated, {csp_count} strategy-proof, all three predicates agree",
            tables.len()
        ),
    ))
}

/// Sampled stand-in for spaces whose table count is out of enumeration
/// reach: random onto tables plus construction-derived ones, checked for the
/// same agreement. The manipulation search joins only while the coalition
/// scan stays affordable (at most two voters).
pub fn equivalence_sampled(
    space: &Arc<ProfileSpace>,
    a: Alternative,
    b: Alternative,
    seed: u64,
    samples: usize,
) -> Result<CheckReport> {
    let name = "characterization-equivalence";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = space.num_profiles();
    let deep = space.num_voters() <= 2;
    let mut built = 0usize;
    let mut degenerate = 0usize;
    let mut csp_count = 0usize;
    let mut checked = 0usize;
    for draw in 0..samples {
        let table = if draw % 3 == 0 {
            let t = random_spec(space, &mut rng)?.to_table()?;
            built += 1;
            t
        } else {
            let values = (0..n)
                .map(|_| if rng.gen_bool(0.5) { b } else { a })
                .collect();
            ScfTable::new(Arc::clone(space), values)?
        };
        if table.range().len() != 2 {
            degenerate += 1;
            continue;
        }
        let (x, y) = table.range_pair()?;
        let by_dominance = is_compatible(&table, x, y)?;
        let by_conditions = is_essentially_based_and_monotonic(&table, x, y)?;
        if by_dominance != by_conditions {
            return Ok(CheckReport::fail(
                name,
                format!(
                    "sampled table {draw}: dominance scan {by_dominance}, basis/monotonicity \
                     conditions {by_conditions}"
                ),
            ));
        }
        if deep {
            let by_search = is_csp(&table);
            if by_search != by_dominance {
                return Ok(CheckReport::fail(
                    name,
                    format!(
                        "sampled table {draw}: manipulation search {by_search}, dominance scan \
                         {by_dominance}"
                    ),
                ));
            }
        }
        if by_dominance {
            csp_count += 1;
        }
        checked += 1;
    }
    let scope = if deep {
        "all three predicates agree"
    } else {
        "dominance and conditions agree (search skipped at this scale)"
    };
    Ok(CheckReport::pass(
        name,
        format!(
            "{checked} sampled tables ({built} construction-derived, {degenerate} degenerate \
             skipped), {csp_count} strategy-proof, {scope}"
        ),
    ))
}

/// Round-trips tables through the decomposition: every enumerable
/// strategy-proof onto table (when the space admits enumeration) plus a run
/// of seeded random constructions must decompose and re-evaluate to the
/// exact same table.
pub fn roundtrip_check(
    space: &Arc<ProfileSpace>,
    a: Alternative,
    b: Alternative,
    seed: u64,
    random_count: usize,
) -> Result<CheckReport> {
    let name = "representation-roundtrip";
    let mut enumerated = 0usize;
    if space.num_profiles() <= MAX_EXHAUSTIVE_PROFILES {
        for f in onto_pair_tables(space, a, b)? {
            if !is_csp(&f) {
                continue;
            }
            let spec = match decompose(&f, a, b, None) {
                Ok(spec) => spec,
                Err(e) => {
                    return Ok(CheckReport::fail(
                        name,
                        format!("decomposition rejected a strategy-proof table: {e}"),
                    ))
                }
            };
            if spec.to_table()?.values() != f.values() {
                return Ok(CheckReport::fail(
                    name,
                    format!("enumerated table {enumerated} disagrees with its decomposition"),
                ));
            }
            enumerated += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0usize;
    let mut skipped = 0usize;
    let mut attempts = 0usize;
    while done < random_count {
        attempts += 1;
        if attempts > random_count * 20 + 50 {
            return Ok(CheckReport::fail(
                name,
                format!("only {done} of {random_count} random draws attained two values"),
            ));
        }
        let table = random_spec(space, &mut rng)?.to_table()?;
        if table.range().len() != 2 {
            skipped += 1;
            continue;
        }
        let (x, y) = table.range_pair()?;
        let back = match decompose(&table, x, y, None) {
            Ok(spec) => spec.to_table()?,
            Err(e) => {
                return Ok(CheckReport::fail(
                    name,
                    format!("decomposition rejected random construction {done}: {e}"),
                ))
            }
        };
        if back.values() != table.values() {
            return Ok(CheckReport::fail(
                name,
                format!("random construction {done} fails to round-trip"),
            ));
        }
        done += 1;
    }
    Ok(CheckReport::pass(
        name,
        format!(
            "{enumerated} enumerated strategy-proof tables and {done} random constructions \
             round-trip exactly ({skipped} constant draws skipped)"
        ),
    ))
}

/// Draws seeded random construction specs and verifies every resulting
/// table is coalitionally strategy-proof. `deep` runs the full manipulation
/// search; otherwise two-valued tables go through the dominance scan and
/// constant tables pass vacuously (no misreport moves the outcome).
pub fn construction_csp_scan(
    space: &Arc<ProfileSpace>,
    seed: u64,
    count: usize,
    deep: bool,
) -> Result<CheckReport> {
    let name = "construction-strategy-proof";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut constants = 0usize;
    for k in 0..count {
        let table = random_spec(space, &mut rng)?.to_table()?;
        if deep {
            if let Some(w) = csp_witness(&table) {
                return Ok(CheckReport::fail(
                    name,
                    format!(
                        "construction {k} is manipulable: coalition mask {:#b} at profile P#{} \
                         gains by reporting P#{}",
                        w.coalition.mask(),
                        w.profile,
                        w.misreport
                    ),
                ));
            }
        } else if table.range().len() < 2 {
            constants += 1;
        } else {
            let (x, y) = table.range_pair()?;
            if let Some((p, q)) = compatibility_witness(&table, x, y)? {
                return Ok(CheckReport::fail(
                    name,
                    format!(
                        "construction {k} breaks dominance compatibility at profiles P#{p}, P#{q}"
                    ),
                ));
            }
        }
    }
    let method = if deep {
        format!("{count} random constructions pass the full manipulation search")
    } else {
        format!(
            "{count} random constructions pass the dominance scan ({constants} constant, \
             strategy-proof vacuously)"
        )
    };
    Ok(CheckReport::pass(name, method))
}

/// Probes the two-voter, three-alternative fixture at its four labelled
/// profiles, checks strategy-proofness, and confirms the decomposition
/// reproduces the table with default `a`.
pub fn fixture_check() -> Result<CheckReport> {
    let name = "fixture-decomposition";
    let f = ScfTable::iia_counterexample();
    let space = f.space_arc();
    let a = Alternative(0);
    let b = Alternative(1);
    let tie_ab_over_c = WeakOrder::from_assignment(vec![0, 0, 1])?;
    let strict_abc = WeakOrder::from_assignment(vec![0, 1, 2])?;
    let c_over_tie_ab = WeakOrder::from_assignment(vec![1, 1, 0])?;
    let probes = [
        (tie_ab_over_c.clone(), tie_ab_over_c.clone(), a),
        (tie_ab_over_c.clone(), strict_abc.clone(), a),
        (c_over_tie_ab.clone(), c_over_tie_ab.clone(), b),
        (c_over_tie_ab.clone(), strict_abc.clone(), b),
    ];
    for (first, second, want) in probes {
        let idx = space.index_of(&Profile::new(vec![first, second])?)?;
        if f.value(idx) != want {
            return Ok(CheckReport::fail(
                name,
                format!(
                    "fixture value at P#{idx} is '{}', expected '{}'",
                    space.universe().label(f.value(idx)),
                    space.universe().label(want)
                ),
            ));
        }
    }
    if let Some(w) = csp_witness(&f) {
        return Ok(CheckReport::fail(
            name,
            format!("fixture is manipulable at profile P#{}", w.profile),
        ));
    }
    let spec = match decompose(&f, a, b, None) {
        Ok(spec) => spec,
        Err(e) => {
            return Ok(CheckReport::fail(
                name,
                format!("decomposition rejected the fixture: {e}"),
            ))
        }
    };
    if spec.default_value() != a {
        return Ok(CheckReport::fail(
            name,
            format!(
                "decomposition default is '{}', expected '{}'",
                space.universe().label(spec.default_value()),
                space.universe().label(a)
            ),
        ));
    }
    if spec.to_table()?.values() != f.values() {
        return Ok(CheckReport::fail(
            name,
            "decomposition disagrees with the fixture table".into(),
        ));
    }
    Ok(CheckReport::pass(
        name,
        "four labelled profiles, manipulation search, and decomposition round-trip with \
         default 'a'"
            .into(),
    ))
}

/// On the two-alternative strict subdomain, enumerates every onto table,
/// keeps the strategy-proof ones, and matches them — as sets of value
/// tables — against the committee rules of the independently enumerated
/// families (nonempty, superset-closed, without the empty coalition), at
/// two and at three voters.
pub fn strict_committee_check() -> Result<CheckReport> {
    let name = "strict-committee-rules";
    let mut parts = Vec::new();
    for nv in [2usize, 3] {
        let space = Arc::new(ProfileSpace::with_default_labels(nv, 2)?);
        let a = Alternative(0);
        let b = Alternative(1);
        let n = strict_ranks(&space).len().pow(nv as u32);
        let mut surviving: Vec<Vec<Alternative>> = Vec::new();
        for mask in 1..(1u32 << n) - 1 {
            let values = (0..n)
                .map(|i| if mask >> i & 1 == 1 { b } else { a })
                .collect();
            let f = StrictScf::new(Arc::clone(&space), values)?;
            if f.is_csp() {
                surviving.push(f.values().to_vec());
            }
        }
        let mut rules: Vec<Vec<Alternative>> = Vec::new();
        for family in enumerate_committees(space.full_set())? {
            if family.is_empty() || family.contains(VoterSet::empty()) {
                continue;
            }
            let rule = strict_committee_scf(Arc::clone(&space), &family, a, b)?;
            rules.push(rule.values().to_vec());
        }
        surviving.sort();
        rules.sort();
        if surviving != rules {
            return Ok(CheckReport::fail(
                name,
                format!(
                    "{nv} voters: {} strategy-proof onto tables vs {} committee rules, sets \
                     differ",
                    surviving.len(),
                    rules.len()
                ),
            ));
        }
        parts.push(format!("{nv} voters: {} rules", rules.len()));
    }
    Ok(CheckReport::pass(
        name,
        format!(
            "strict onto tables match the committee rules exactly ({})",
            parts.join("; ")
        ),
    ))
}

/// Depth-first enumeration of every strategy-proof table on the two-voter,
/// three-alternative strict subdomain, pruned by a precomputed pairwise
/// manipulation matrix. The full-range survivors must be exactly the two
/// dictatorships; the dictator finder must agree on them and reject a
/// tie-broken majority rule.
pub fn strict_dictatorship_check() -> Result<CheckReport> {
    let name = "strict-dictatorships";
    let space = Arc::new(ProfileSpace::with_default_labels(2, 3)?);
    let alts: Vec<Alternative> = space.universe().alternatives().collect();
    let na = alts.len();
    let dom = OrderDomain {
        space: &space,
        allowed: strict_ranks(&space),
    };
    let n = dom.num_profiles();
    let profiles: Vec<Profile> = (0..n).map(|i| dom.profile(i)).collect();
    let digits: Vec<Vec<usize>> = (0..n).map(|i| dom.digits(i)).collect();
    // bad[((i*n + j)*na + x)*na + y]: with f(i)=x and f(j)=y, the voters
    // separating the profiles all strictly gain by reporting j at i.
    let mut bad = vec![false; n * n * na * na];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let movers: Vec<Voter> = (0..space.num_voters())
                .filter(|&v| digits[i][v] != digits[j][v])
                .map(|v| Voter(v as u8))
                .collect();
            for (xi, &x) in alts.iter().enumerate() {
                for (yi, &y) in alts.iter().enumerate() {
                    if x == y {
                        continue;
                    }
                    let gain = movers
                        .iter()
                        .all(|&v| profiles[i].order(v).compare(y, x).unwrap() == PairOrder::Above);
                    if gain {
                        bad[((i * n + j) * na + xi) * na + yi] = true;
                    }
                }
            }
        }
    }

    fn search(
        k: usize,
        n: usize,
        na: usize,
        alts: &[Alternative],
        bad: &[bool],
        values: &mut Vec<Alternative>,
        out: &mut Vec<Vec<Alternative>>,
    ) {
        if k == n {
            out.push(values.clone());
            return;
        }
        'cand: for (yi, &y) in alts.iter().enumerate() {
            for i in 0..k {
                let xi = values[i].index();
                if bad[((i * n + k) * na + xi) * na + yi] || bad[((k * n + i) * na + yi) * na + xi]
                {
                    continue 'cand;
                }
            }
            values[k] = y;
            search(k + 1, n, na, alts, bad, values, out);
        }
    }

    let mut solutions: Vec<Vec<Alternative>> = Vec::new();
    let mut values = vec![alts[0]; n];
    search(0, n, na, &alts, &bad, &mut values, &mut solutions);

    let mut by_range_size = [0usize; 4];
    for vals in &solutions {
        let mut seen = vals.clone();
        seen.sort();
        seen.dedup();
        by_range_size[seen.len()] += 1;
    }
    // 3 constants, 4 committee rules per unordered pair, 2 dictatorships.
    if by_range_size != [0, 3, 12, 2] {
        return Ok(CheckReport::fail(
            name,
            format!(
                "range-size histogram is {}/{}/{} (constant/pair/full), expected 3/12/2",
                by_range_size[1], by_range_size[2], by_range_size[3]
            ),
        ));
    }
    let mut dictators = Vec::new();
    for vals in solutions.iter().filter(|vals| {
        let mut seen = (*vals).clone();
        seen.sort();
        seen.dedup();
        seen.len() == na
    }) {
        let f = StrictScf::new(Arc::clone(&space), vals.clone())?;
        match find_strict_dictator(&f, &alts)? {
            Some(d) => dictators.push(d),
            None => {
                return Ok(CheckReport::fail(
                    name,
                    "a full-range strategy-proof table has no dictator".into(),
                ))
            }
        }
    }
    dictators.sort();
    if dictators != vec![Voter(0), Voter(1)] {
        return Ok(CheckReport::fail(
            name,
            "the two full-range tables do not name both voters as dictators".into(),
        ));
    }
    // Agreeing tops win; disagreements go to the lower-numbered top.
    let majority = StrictScf::from_fn(Arc::clone(&space), |p| {
        let top = |v: Voter| {
            alts.iter()
                .copied()
                .min_by_key(|&x| p.order(v).class_index(x).unwrap())
                .unwrap()
        };
        let (t0, t1) = (top(Voter(0)), top(Voter(1)));
        if t0 == t1 || t0.index() < t1.index() {
            t0
        } else {
            t1
        }
    })?;
    if majority.is_csp() {
        return Ok(CheckReport::fail(
            name,
            "the tie-broken majority rule passes the manipulation search".into(),
        ));
    }
    if find_strict_dictator(&majority, &alts)?.is_some() {
        return Ok(CheckReport::fail(
            name,
            "the tie-broken majority rule names a dictator".into(),
        ));
    }
    Ok(CheckReport::pass(
        name,
        format!(
            "{} strategy-proof tables on {n} strict profiles; the 2 full-range ones are the \
             dictatorships of each voter; majority counterexample rejected",
            solutions.len()
        ),
    ))
}

/// Exhaustive structural invariants at a small scale: duality is an
/// involution, no profile sits in both classes of any extended committee,
/// the four-way dominance equivalence, the indifferent/supporter partition
/// of the society, and weak Pareto over every strategy-proof table the
/// scale admits enumerating (seeded constructions otherwise).
pub fn invariant_check(
    num_voters: usize,
    num_alternatives: usize,
    seed: u64,
) -> Result<CheckReport> {
    let name = "structural-invariants";
    if num_voters > 2 || num_alternatives > 3 {
        return Err(Error::resource(
            "exhaustive invariant scans stop at two voters and three alternatives",
        ));
    }
    let space = Arc::new(ProfileSpace::with_default_labels(
        num_voters,
        num_alternatives,
    )?);
    let a = Alternative(0);
    let b = Alternative(1);
    let profiles: Vec<Profile> = space.profiles().collect();
    let full = space.full_set();

    let mut families = 0usize;
    for mask in 0..=full.mask() {
        let carrier = VoterSet::from_mask(mask);
        for family in enumerate_committees(carrier)? {
            if family.dual().carrier() != carrier || family.dual().dual() != family {
                return Ok(CheckReport::fail(
                    name,
                    format!("duality fails to involute on carrier mask {mask:#b}"),
                ));
            }
            families += 1;
        }
    }

    let tied: Vec<WeakOrder> = space
        .orders()
        .iter()
        .filter(|o| o.compare(a, b).unwrap() == PairOrder::Tied)
        .cloned()
        .collect();
    let mut extended = 0usize;
    for dmask in 0..=full.mask() {
        let frozen: Vec<Voter> = VoterSet::from_mask(dmask).voters().collect();
        let carrier = VoterSet::from_mask(dmask).complement_within(num_voters);
        let candidates = enumerate_committees(carrier)?;
        let mut choice = vec![0usize; frozen.len()];
        loop {
            let entries: Vec<(Voter, WeakOrder)> = frozen
                .iter()
                .zip(&choice)
                .map(|(&v, &c)| (v, tied[c].clone()))
                .collect();
            let pi = PartialProfile::new(num_voters, entries)?;
            for family in &candidates {
                let ec = ExtendedCommittee::new(pi.clone(), family.clone(), a, b)?;
                extended += 1;
                for (idx, p) in profiles.iter().enumerate() {
                    if ec.in_class(p, a, b, a)? && ec.in_class(p, a, b, b)? {
                        return Ok(CheckReport::fail(
                            name,
                            format!(
                                "profile P#{idx} sits in both classes of an extended committee"
                            ),
                        ));
                    }
                }
            }
            let mut done = true;
            let mut pos = choice.len();
            while pos > 0 {
                pos -= 1;
                if choice[pos] + 1 < tied.len() {
                    choice[pos] += 1;
                    for c in &mut choice[pos + 1..] {
                        *c = 0;
                    }
                    done = false;
                    break;
                }
            }
            if done {
                break;
            }
        }
    }

    for (pi, p) in profiles.iter().enumerate() {
        for (qi, q) in profiles.iter().enumerate() {
            let both_sides = dominates(p, q, a, b, a)? && dominates(p, q, a, b, b)?;
            let mutual_a = dominates(p, q, a, b, a)? && dominates(q, p, a, b, a)?;
            let mutual_b = dominates(p, q, a, b, b)? && dominates(q, p, a, b, b)?;
            let agree_everywhere = equivalence_set(p, q, a, b)? == full;
            if both_sides != mutual_a || mutual_a != mutual_b || mutual_b != agree_everywhere {
                return Ok(CheckReport::fail(
                    name,
                    format!("dominance equivalence breaks between P#{pi} and P#{qi}"),
                ));
            }
        }
    }

    for (idx, p) in profiles.iter().enumerate() {
        let tied_set = indifference_set(p, a, b)?;
        let da = supporters(a, p, b)?;
        let db = supporters(b, p, a)?;
        let disjoint = tied_set.intersection(da).is_empty()
            && tied_set.intersection(db).is_empty()
            && da.intersection(db).is_empty();
        if !disjoint || tied_set.union(da).union(db) != full {
            return Ok(CheckReport::fail(
                name,
                format!("indifferent/supporter sets fail to partition the society at P#{idx}"),
            ));
        }
    }

    let mut pareto_tables = 0usize;
    if space.num_profiles() <= MAX_EXHAUSTIVE_PROFILES {
        for f in onto_pair_tables(&space, a, b)? {
            if !is_csp(&f) {
                continue;
            }
            if !is_weak_pareto(&f) {
                return Ok(CheckReport::fail(
                    name,
                    format!("enumerated strategy-proof table {pareto_tables} breaks weak Pareto"),
                ));
            }
            pareto_tables += 1;
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in 0..50 {
            let table = random_spec(&space, &mut rng)?.to_table()?;
            if !is_weak_pareto(&table) {
                return Ok(CheckReport::fail(
                    name,
                    format!("random construction {k} breaks weak Pareto"),
                ));
            }
            pareto_tables += 1;
        }
    }

    Ok(CheckReport::pass(
        name,
        format!(
            "{families} families, {extended} extended committees, {} profile pairs, \
             {pareto_tables} strategy-proof tables checked",
            profiles.len() * profiles.len()
        ),
    ))
}

/// Runs every named check with deterministic seeding. The scans
/// parameterized by the space run at `(num_voters, num_alternatives)`;
/// fixed-size checks (the fixture and the strict subdomain enumerations)
/// run at their inherent scales.
pub fn run_suite(num_voters: usize, num_alternatives: usize, seed: u64) -> Result<SuiteReport> {
    if num_voters == 0 || num_alternatives < 2 {
        return Err(Error::domain(
            "the suite needs at least one voter and two alternatives",
        ));
    }
    if num_voters > 3 || num_alternatives > 3 {
        return Err(Error::resource(
            "desk-scale verification stops at three voters and three alternatives",
        ));
    }
    let space = Arc::new(ProfileSpace::with_default_labels(
        num_voters,
        num_alternatives,
    )?);
    let a = Alternative(0);
    let b = Alternative(1);
    let big = space.num_profiles() > MAX_EXHAUSTIVE_PROFILES;
    let huge = space.num_profiles() > 1000;
    let mut checks = Vec::new();
    checks.push(if big {
        equivalence_sampled(&space, a, b, seed, if huge { 12 } else { 60 })?
    } else {
        equivalence_exhaustive(&space, a, b)?
    });
    checks.push(roundtrip_check(
        &space,
        a,
        b,
        seed.wrapping_add(1),
        if huge { 10 } else { 200 },
    )?);
    let deep = num_voters <= 2 || space.num_profiles() <= 100;
    checks.push(construction_csp_scan(
        &space,
        seed.wrapping_add(2),
        if huge { 30 } else { 200 },
        deep,
    )?);
    checks.push(fixture_check()?);
    checks.push(strict_committee_check()?);
    checks.push(strict_dictatorship_check()?);
    checks.push(invariant_check(
        num_voters.min(2),
        num_alternatives,
        seed.wrapping_add(3),
    )?);
    Ok(SuiteReport {
        num_voters,
        num_alternatives,
        seed,
        checks,
    })
}
