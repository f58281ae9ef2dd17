//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Two criteria state identities that do not hold. They are checked exactly as
//! stated, reported as FAIL, and listed in `KNOWN_FAILURES` with the precise
//! failure expected. The run exits nonzero on any other failure, or if a known
//! failure changes shape or starts passing.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use splitmerge::decomposition::decompose;
use splitmerge::enumerate::enumerate_clusterings;
use splitmerge::lattice::meet_with_table;
use splitmerge::measures::exact::{accuracy_exact, van_dongen_exact};
use splitmerge::splitmerge::{
    merge_set, s_entropy, s_max, s_mse, s_star_via_pairs, split_set, subcomponent_pairs,
    EntropyOverLogK, EntropyOverLogKSquared, EntropySubcomponent, MaxOverlapSubcomponent,
    MseSubcomponent,
};
use splitmerge::{
    accuracy, components, entropy, entropy_stats, generate_series, join, k_measure, meet, nmi,
    rand_index, s_prime, s_star, sh_measure, smse_measure, v_similarity, van_dongen, Clustering,
    FeatureMatrix, MeasureId, MeasureParams, StepOp,
};

const TIGHT: f64 = 1e-12;
const DECOMP_TOL: f64 = 1e-10;

/// Criterion id and the detail string its failure must reproduce.
const KNOWN_FAILURES: &[(&str, &str)] = &[
    ("2", "N floor differs at n = [3, 7]"),
    (
        "5",
        "S' with 1 - H/log k^2 differs from K on every pair with K < 1",
    ),
];

struct Outcome {
    id: &'static str,
    title: &'static str,
    passed: bool,
    detail: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(id: &'static str, title: &'static str) -> Self {
        Self {
            id,
            title,
            passed: true,
            detail: String::new(),
            notes: Vec::new(),
        }
    }

    fn fail(&mut self, detail: impl Into<String>) {
        self.passed = false;
        if self.detail.is_empty() {
            self.detail = detail.into();
        } else {
            self.detail = format!("{}; {}", self.detail, detail.into());
        }
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

fn random_clustering(rng: &mut ChaCha8Rng, n: usize, max_clusters: usize) -> Clustering {
    let m = rng.gen_range(1..=max_clusters.max(1));
    let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..m)).collect();
    Clustering::from_labels(&labels).unwrap()
}

fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> (Clustering, Clustering) {
    let cap = n.max(2);
    (
        random_clustering(rng, n, cap),
        random_clustering(rng, n, cap),
    )
}

fn random_features(rng: &mut ChaCha8Rng, n: usize, dim: usize) -> FeatureMatrix {
    let rows = (0..n)
        .map(|_| (0..dim).map(|_| rng.gen_range(-10.0..10.0)).collect())
        .collect();
    FeatureMatrix::from_rows(rows).unwrap()
}

fn partitions(n: usize) -> Vec<Clustering> {
    enumerate_clusterings(n).unwrap().collect()
}

fn criterion_1() -> Outcome {
    let mut out = Outcome::new("1", "S_H conditional normalization, exhaustive n = 1..7");
    let mut pairs = 0usize;
    for n in 1..=7 {
        let all = partitions(n);
        for l in &all {
            for c in &all {
                pairs += 1;
                let s = sh_measure::<f64>(l, c).unwrap().value;
                let worst = meet(l, c).unwrap().is_bottom() && !l.shares_cluster_with(c);
                let ok = if l == c {
                    (s - 1.0).abs() <= TIGHT
                } else if worst {
                    s.abs() <= TIGHT
                } else {
                    s > TIGHT && s < 1.0 - TIGHT
                };
                if !ok {
                    out.fail(format!(
                        "n={n} {:?} vs {:?} scored {s}",
                        l.labels(),
                        c.labels()
                    ));
                    return out;
                }
            }
        }
    }
    out.detail = format!("{pairs} ordered pairs");
    out
}

fn isqrt_floor(n: usize) -> usize {
    (0..=n).take_while(|r| r * r <= n).last().unwrap()
}

fn isqrt_ceil(n: usize) -> usize {
    (0..=n).find(|r| r * r >= n).unwrap()
}

/// Smallest `m` with `m² ≥ 4n`, i.e. `⌈2√n⌉`.
fn ceil_two_sqrt(n: usize) -> usize {
    (0..).find(|m| m * m >= 4 * n).unwrap()
}

fn criterion_2() -> Outcome {
    let mut out = Outcome::new("2", "normalization counterexamples for N, A, V (exact)");
    let mut n_mismatch = Vec::new();
    let mut true_floor_mismatch = Vec::new();
    for n in 1..=7 {
        let all = partitions(n);
        let mut min_n = Ratio::from_integer(1u128);
        let mut min_a = Ratio::from_integer(1u128);
        for l in &all {
            for c in &all {
                min_n = min_n.min(van_dongen_exact(l, c).unwrap());
                min_a = min_a.min(accuracy_exact(l, c).unwrap());
            }
        }
        let nn = n as u128;
        let stated = Ratio::new((isqrt_floor(n) + isqrt_ceil(n)) as u128, 2 * nn);
        if min_n != stated {
            n_mismatch.push(n);
            out.note(format!("n={n}: min N = {min_n}, stated floor = {stated}"));
        }
        if min_n != Ratio::new(ceil_two_sqrt(n) as u128, 2 * nn) {
            true_floor_mismatch.push(n);
        }
        if min_a != Ratio::new(1, nn) {
            out.fail(format!("n={n}: min A = {min_a}, expected 1/{n}"));
        }
    }
    if !n_mismatch.is_empty() {
        out.fail(format!("N floor differs at n = {n_mismatch:?}"));
    }
    if true_floor_mismatch.is_empty() {
        out.note("min N = ceil(2 sqrt n)/(2n) holds for every n = 1..7");
    } else {
        out.fail(format!(
            "ceil(2 sqrt n)/(2n) also differs at n = {true_floor_mismatch:?}"
        ));
    }

    let l = Clustering::from_clusters(3, &[vec![0, 1], vec![2]]).unwrap();
    let best = partitions(3)
        .iter()
        .map(|c| v_similarity::<f64>(&l, c).unwrap().value)
        .fold(f64::INFINITY, f64::min);
    if best <= TIGHT {
        out.fail(format!("V reached {best} against {{{{1,2}},{{3}}}}"));
    } else {
        out.note(format!("V against {{{{1,2}},{{3}}}} never below {best:.6}"));
    }
    out
}

fn decomposition_residual(measure: MeasureId, l: &Clustering, c: &Clustering) -> f64 {
    let k = 2.max(l.num_clusters()).max(c.num_clusters());
    let params = MeasureParams::with_k(k);
    decompose::<f64>(measure, l, c, &params).unwrap().residual()
}

const DECOMPOSABLE: [MeasureId; 7] = [
    MeasureId::Rand,
    MeasureId::MutualInfo,
    MeasureId::V,
    MeasureId::VanDongen,
    MeasureId::Accuracy,
    MeasureId::K,
    MeasureId::Sh,
];

fn criterion_3() -> Outcome {
    let mut out = Outcome::new(
        "3",
        "decomposition identity for rand, mi, v, vandongen, accuracy, k, sh",
    );
    let started = Instant::now();
    let mut worst = 0.0f64;
    let mut checks = 0usize;
    for n in 1..=6 {
        let all = partitions(n);
        for l in &all {
            for c in &all {
                for measure in DECOMPOSABLE {
                    if measure == MeasureId::Rand && n < 2 {
                        continue;
                    }
                    worst = worst.max(decomposition_residual(measure, l, c));
                    checks += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let (l, c) = random_pair(&mut rng, 200);
        for measure in DECOMPOSABLE {
            worst = worst.max(decomposition_residual(measure, &l, &c));
            checks += 1;
        }
    }
    let elapsed = started.elapsed();
    if worst > DECOMP_TOL {
        out.fail(format!("max residual {worst:e}"));
    }
    if elapsed > Duration::from_secs(60) {
        out.fail(format!("took {elapsed:?}"));
    }
    out.detail = format!("{checks} decompositions, max residual {worst:.2e}, {elapsed:.2?}");
    out
}

fn criterion_4() -> Outcome {
    let mut out = Outcome::new("4", "subcomponent consistency of S_H and A, S' witness");
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut witnesses = 0usize;
    let e = EntropySubcomponent;
    for _ in 0..500 {
        let size = rng.gen_range(1..=40);
        let induced = random_clustering(&mut rng, size, size);
        let whole = Clustering::top(size);
        let cluster: Vec<usize> = (0..size).collect();

        let sub = s_entropy::<f64>(&cluster, &induced).unwrap();
        let split_side = s_star::<f64>(&whole, &induced, &e, &e, None).unwrap().value;
        let merge_side = s_star::<f64>(&induced, &whole, &e, &e, None).unwrap().value;
        if (split_side - sub).abs() > TIGHT || (merge_side - sub).abs() > TIGHT {
            out.fail(format!(
                "S_H {split_side}/{merge_side} vs s = {sub} on {:?}",
                induced.labels()
            ));
            break;
        }

        let max_share = s_max::<f64>(&cluster, &induced).unwrap();
        let a_split = accuracy::<f64>(&whole, &induced).unwrap().value;
        let a_merge = accuracy::<f64>(&induced, &whole).unwrap().value;
        if (a_split - max_share).abs() > TIGHT || (a_merge - max_share).abs() > TIGHT {
            out.fail(format!("A {a_split}/{a_merge} vs s = {max_share}"));
            break;
        }

        if sub < 1.0 {
            let sp = s_prime::<f64>(&whole, &induced, &e, &e, None)
                .unwrap()
                .value;
            if sp > sub && (sp - (sub / 2.0 + 0.5)).abs() <= TIGHT {
                witnesses += 1;
            } else {
                out.fail(format!("no S' witness: S' = {sp}, s = {sub}"));
                break;
            }
        }
    }
    out.detail = format!("500 instances, {witnesses} S' witnesses");
    out
}

fn criterion_5() -> Outcome {
    let mut out = Outcome::new("5", "S' instances: s_max gives N, 1 - H/log k^2 gives K");
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let max = MaxOverlapSubcomponent;
    let (mut n_bad, mut k_bad, mut k_corrected_bad, mut k_below_one) =
        (0usize, 0usize, 0usize, 0usize);
    for _ in 0..500 {
        let n = rng.gen_range(2..=60);
        let (l, c) = random_pair(&mut rng, n);
        let sp = s_prime::<f64>(&l, &c, &max, &max, None).unwrap().value;
        if (sp - van_dongen::<f64>(&l, &c).unwrap().value).abs() > TIGHT {
            n_bad += 1;
        }
        let k = 2.max(l.num_clusters()).max(c.num_clusters());
        let kv = k_measure::<f64>(&l, &c, k).unwrap().value;
        k_below_one += usize::from(kv < 1.0);
        let sq = EntropyOverLogKSquared { k };
        if (s_prime::<f64>(&l, &c, &sq, &sq, None).unwrap().value - kv).abs() > TIGHT {
            k_bad += 1;
        }
        let lin = EntropyOverLogK { k };
        if (s_prime::<f64>(&l, &c, &lin, &lin, None).unwrap().value - kv).abs() > TIGHT {
            k_corrected_bad += 1;
        }
    }
    if n_bad > 0 {
        out.fail(format!("S' with s_max differs from N on {n_bad}/500 pairs"));
    } else {
        out.note("S' with s_max equals N on 500/500 pairs");
    }
    if k_bad > 0 && k_bad == k_below_one {
        out.fail("S' with 1 - H/log k^2 differs from K on every pair with K < 1");
        out.note(format!("{k_bad}/500 pairs have K < 1"));
    } else if k_bad > 0 {
        out.fail(format!(
            "S' with 1 - H/log k^2 differs from K on {k_bad}/500 pairs"
        ));
    }
    if k_corrected_bad == 0 {
        out.note("S' with 1 - H/log k equals K on 500/500 pairs (log k^2 form yields (1 + K)/2)");
    } else {
        out.fail(format!(
            "S' with 1 - H/log k differs from K on {k_corrected_bad}/500 pairs"
        ));
    }
    out
}

fn bfs_components(l: &Clustering, c: &Clustering) -> BTreeSet<Vec<usize>> {
    let n = l.n();
    let (lc, cc) = (l.clusters(), c.clusters());
    let mut seen = vec![false; n];
    let mut found = BTreeSet::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut members = Vec::new();
        while let Some(p) = queue.pop_front() {
            members.push(p);
            for &q in lc[l.label_of(p)].iter().chain(&cc[c.label_of(p)]) {
                if !seen[q] {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
        members.sort_unstable();
        found.insert(members);
    }
    found
}

fn sorted_sets(mut sets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for s in &mut sets {
        s.sort_unstable();
    }
    sets.sort();
    sets
}

fn criterion_6() -> Outcome {
    let mut out = Outcome::new(
        "6",
        "components, split/merge structure, pair bijection, exhaustive n <= 6",
    );
    let mut violations = BTreeMap::<&str, usize>::new();
    let mut pairs = 0usize;
    for n in 1..=6 {
        let all = partitions(n);
        for l in &all {
            for c in &all {
                pairs += 1;
                let comps = components(l, c).unwrap();
                let ours: BTreeSet<Vec<usize>> =
                    comps.iter().map(|j| j.join_cluster.clone()).collect();
                if ours != bfs_components(l, c) || join(l, c).unwrap().num_clusters() != comps.len()
                {
                    *violations.entry("components").or_default() += 1;
                }

                let m = meet(l, c).unwrap();
                for comp in &comps {
                    let local_meet: Vec<Vec<usize>> = m
                        .clusters()
                        .into_iter()
                        .filter(|cl| comp.join_cluster.binary_search(&cl[0]).is_ok())
                        .collect();
                    let local_meet = sorted_sets(local_meet);
                    let sinks = sorted_sets(
                        split_set(comp)
                            .iter()
                            .flat_map(|g| g.target_sets())
                            .collect(),
                    );
                    let sources = sorted_sets(
                        merge_set(comp)
                            .iter()
                            .flat_map(|g| g.source_sets())
                            .collect(),
                    );
                    if sinks != local_meet || sources != local_meet {
                        *violations.entry("split/merge").or_default() += 1;
                    }
                }

                let pairs_found = subcomponent_pairs(l, c).unwrap();
                let covered =
                    sorted_sets(pairs_found.iter().map(|p| p.meet_cluster.clone()).collect());
                let bijective = pairs_found.len() == m.num_clusters()
                    && covered == sorted_sets(m.clusters())
                    && pairs_found.iter().all(|p| {
                        let mut inter: Vec<usize> = p
                            .split
                            .source_cluster
                            .iter()
                            .copied()
                            .filter(|x| p.merge.target_cluster.contains(x))
                            .collect();
                        inter.sort_unstable();
                        let mut mc = p.meet_cluster.clone();
                        mc.sort_unstable();
                        inter == mc
                    });
                if !bijective {
                    *violations.entry("pairs").or_default() += 1;
                }
            }
        }
    }
    if violations.is_empty() {
        out.detail = format!("{pairs} ordered pairs, zero violations");
    } else {
        out.fail(format!("violations {violations:?}"));
    }
    out
}

/// Frozen regression fixture: S_H against the truth along the seed-0 series.
const FIXTURE_SERIES: [f64; 18] = [
    1.0,
    0.8787878787878788,
    0.7837502287699124,
    0.7231441681638517,
    0.6625381075577911,
    0.5716290166487004,
    0.5176987681345563,
    0.48739573783152607,
    0.4570927075284957,
    0.4267896772254654,
    0.3964866469224351,
    0.35733423255212665,
    0.3181818181818182,
    0.2727272727272727,
    0.22727272727272724,
    0.1363636363636363,
    0.04545454545454541,
    0.0,
];

fn fixture_truth() -> Clustering {
    let labels: Vec<usize> = [8usize, 5, 4, 2, 1, 1, 1]
        .iter()
        .enumerate()
        .flat_map(|(label, &size)| std::iter::repeat_n(label, size))
        .collect();
    Clustering::from_labels(&labels).unwrap()
}

fn criterion_7() -> Outcome {
    let mut out = Outcome::new("7", "degradation series on sizes [8,5,4,2,1,1,1], seed 0");
    let truth = fixture_truth();
    let series = generate_series(&truth, 0);
    let sh: Vec<f64> = series
        .clusterings()
        .map(|c| sh_measure::<f64>(&truth, c).unwrap().value)
        .collect();
    if sh.len() != FIXTURE_SERIES.len() {
        out.fail(format!(
            "{} steps, expected {}",
            sh.len(),
            FIXTURE_SERIES.len()
        ));
        return out;
    }
    if (sh[0] - 1.0).abs() > TIGHT || sh[sh.len() - 1].abs() > TIGHT {
        out.fail(format!("endpoints {} and {}", sh[0], sh[sh.len() - 1]));
    }
    if let Some(i) = sh.windows(2).position(|w| w[1] >= w[0]) {
        out.fail(format!("not strictly decreasing at step {}", i + 1));
    }
    if let Some(i) = sh
        .iter()
        .zip(&FIXTURE_SERIES)
        .position(|(a, b)| (a - b).abs() > TIGHT)
    {
        out.fail(format!(
            "step {i}: {} vs fixture {}",
            sh[i], FIXTURE_SERIES[i]
        ));
    }
    let ops: Vec<StepOp> = series.steps.iter().map(|s| s.op).collect();
    if series.split_count() != 15
        || series.merge_count() != 2
        || ops[15..].iter().any(|&o| o != StepOp::Merge)
    {
        out.fail(format!(
            "{} splits, {} merges",
            series.split_count(),
            series.merge_count()
        ));
    }
    let last = series.terminal();
    let ends = [
        ("A", accuracy::<f64>(&truth, last).unwrap().value),
        ("N", van_dongen::<f64>(&truth, last).unwrap().value),
        ("R", rand_index::<f64>(&truth, last).unwrap().value),
        ("NMI", nmi::<f64>(&truth, last).unwrap().value),
        ("V", v_similarity::<f64>(&truth, last).unwrap().value),
    ];
    for (name, v) in ends {
        if v <= 0.0 {
            out.fail(format!("{name} ends at {v}"));
        }
    }
    out.detail = format!(
        "{} clusterings; terminal {}",
        sh.len(),
        ends.iter()
            .map(|(name, v)| format!("{name}={v:.4}"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    out
}

fn criterion_8() -> Outcome {
    let mut out = Outcome::new("8", "h_joint = H(meet) and I >= 0 on 10,000 random pairs");
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=300);
        let (l, c) = random_pair(&mut rng, n);
        let stats = entropy_stats::<f64>(&l, &c).unwrap();
        let h_meet: f64 = entropy(&meet(&l, &c).unwrap());
        worst = worst.max((stats.h_joint - h_meet).abs());
        let raw_mi = stats.h_left + stats.h_right - stats.h_joint;
        if stats.mutual_info < 0.0 || raw_mi < -TIGHT {
            out.fail(format!("I = {} (raw {raw_mi})", stats.mutual_info));
            break;
        }
    }
    if worst > TIGHT {
        out.fail(format!("max |h_joint - H(meet)| = {worst:e}"));
    }
    out.detail = format!("max |h_joint - H(meet)| = {worst:.2e}");
    out
}

fn criterion_9() -> Outcome {
    let mut out = Outcome::new(
        "9",
        "MSE subcomponent examples, smse symmetry and decomposition",
    );
    let cluster = [0, 1, 2, 3];
    let halves = Clustering::from_clusters(4, &[vec![0, 1], vec![2, 3]]).unwrap();
    let separated = FeatureMatrix::from_column(&[0.0, 0.0, 10.0, 10.0]).unwrap();
    let coincident = FeatureMatrix::from_column(&[-1.0, 1.0, -1.0, 1.0]).unwrap();
    let examples = [
        (
            "separated halves",
            s_mse(&cluster, &halves, &separated).unwrap().value,
            0.0,
        ),
        (
            "whole cluster",
            s_mse(&cluster, &Clustering::top(4), &separated)
                .unwrap()
                .value,
            1.0,
        ),
        (
            "coincident means",
            s_mse(&cluster, &halves, &coincident).unwrap().value,
            1.0,
        ),
    ];
    for (name, got, want) in examples {
        if got != want {
            out.fail(format!("{name}: {got}, expected {want}"));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut asym, mut resid) = (0.0f64, 0.0f64);
    for _ in 0..500 {
        let n = rng.gen_range(1..=40);
        let dim = rng.gen_range(1..=3);
        let (l, c) = random_pair(&mut rng, n);
        let f = random_features(&mut rng, n, dim);
        let ab = smse_measure(&l, &c, &f).unwrap().value;
        let ba = smse_measure(&c, &l, &f).unwrap().value;
        asym = asym.max((ab - ba).abs());
        resid = resid.max(
            decompose(MeasureId::Smse, &l, &c, &MeasureParams::with_features(&f))
                .unwrap()
                .residual(),
        );
        let m = MseSubcomponent;
        let routed = s_star_via_pairs(&l, &c, &m, &m, Some(&f)).unwrap().value;
        resid = resid.max((routed - ab).abs());
    }
    if asym > TIGHT {
        out.fail(format!("asymmetry {asym:e}"));
    }
    if resid > TIGHT {
        out.fail(format!("decomposition residual {resid:e}"));
    }
    out.detail = format!("500 featured pairs, asymmetry {asym:.2e}, residual {resid:.2e}");
    out
}

fn time_meet(rng: &mut ChaCha8Rng, n: usize) -> Duration {
    let l: Vec<usize> = (0..n).map(|_| rng.gen_range(0..1000)).collect();
    let c: Vec<usize> = (0..n).map(|_| rng.gen_range(0..1000)).collect();
    let (l, c) = (
        Clustering::from_labels(&l).unwrap(),
        Clustering::from_labels(&c).unwrap(),
    );
    (0..3)
        .map(|_| {
            let started = Instant::now();
            let (m, table) = meet_with_table(&l, &c).unwrap();
            let elapsed = started.elapsed();
            assert_eq!(m.num_clusters(), table.cells().len());
            elapsed
        })
        .min()
        .unwrap()
}

fn criterion_10() -> Outcome {
    let mut out = Outcome::new(
        "10",
        "meet + contingency at n = 10^6 with 10^3 clusters per side",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let small = time_meet(&mut rng, 1_000_000);
    let large = time_meet(&mut rng, 2_000_000);
    let ratio = large.as_secs_f64() / small.as_secs_f64();
    if small > Duration::from_secs(2) {
        out.fail(format!("n = 10^6 took {small:?}"));
    }
    if ratio > 2.5 {
        out.fail(format!("doubling n cost {ratio:.2}x"));
    }
    out.detail = format!("{small:.2?} at 10^6, {large:.2?} at 2*10^6 ({ratio:.2}x)");
    out
}

fn main() -> ExitCode {
    let criteria: [fn() -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut unexpected = Vec::new();
    for run in criteria {
        let started = Instant::now();
        let o = run();
        let known = KNOWN_FAILURES.iter().find(|(id, _)| *id == o.id);
        let tag = match (o.passed, known) {
            (true, None) => "PASS",
            (false, Some((_, expected))) if o.detail == *expected => "FAIL (known)",
            _ => {
                unexpected.push(o.id);
                if o.passed {
                    "PASS (expected to fail)"
                } else {
                    "FAIL"
                }
            }
        };
        println!(
            "{tag:<12} criterion {:>2}: {} [{}] ({:.2?})",
            o.id,
            o.title,
            o.detail,
            started.elapsed()
        );
        for note in &o.notes {
            println!("{:<12}   - {note}", "");
        }
    }
    if unexpected.is_empty() {
        println!(
            "acceptance: all criteria as expected ({} known failures)",
            KNOWN_FAILURES.len()
        );
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
