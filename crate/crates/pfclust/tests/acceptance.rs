//! Acceptance gate for the workspace: ten end-to-end checks covering oracle
//! equivalence, structural lemmas, search validity, pruning soundness,
//! heuristic dominance, scaling, and determinism. Each test prints one PASS
//! line with the evidence it gathered (visible with `--nocapture`).

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pfclust::{
    brute_force_interval, brute_force_partitions, cluster_cost_dichotomic_counted,
    cluster_cost_naive, dist_pow, dominates, find_non_unimodal_witness, is_local_minimum,
    local_minima_k2, pam_heuristic, solve_general, solve_general_with_stats, solve_k2,
    solve_k2_with_stats, synth, Alpha, ParetoInstance, PartitionCandidate, Point2, SolveReport,
};

const ALPHA_CHOICES: [f64; 4] = [0.5, 1.0, 2.0, 3.0];

fn alpha(v: f64) -> Alpha {
    Alpha::new(v).unwrap()
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

/// The shared randomized corpus: 200 deterministic draws of
/// (instance with n in [5,60], k in [1, min(6,n)], alpha in {0.5,1,2,3}).
fn corpus() -> Vec<(ParetoInstance, usize, Alpha)> {
    (0..200u64)
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(1_000 + t);
            let n = rng.gen_range(5..=60);
            let k = rng.gen_range(1..=6.min(n));
            let a = alpha(ALPHA_CHOICES[rng.gen_range(0..4)]);
            let inst = synth::random_front(n, 50_000 + t).unwrap();
            (inst, k, a)
        })
        .collect()
}

#[test]
fn criterion_01_dp_matches_interval_oracle() {
    let start = Instant::now();
    let corpus = corpus();
    for (idx, (inst, k, a)) in corpus.iter().enumerate() {
        let dp = solve_general(inst, *k, *a, true).unwrap();
        let brute = brute_force_interval(inst, *k, *a).unwrap();
        assert!(
            rel_close(dp.total(), brute.total(), 1e-9),
            "instance {idx}: dp {} vs oracle {}",
            dp.total(),
            brute.total()
        );
        assert_eq!(
            dp.breaks(),
            brute.breaks(),
            "instance {idx}: split positions disagree"
        );
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 60.0, "took {secs:.1} s");
    println!(
        "PASS criterion 01: dp == interval oracle on {} instances \
         (totals within 1e-9, identical splits) in {secs:.1} s",
        corpus.len()
    );
}

#[test]
fn criterion_02_dp_matches_unrestricted_oracle() {
    let start = Instant::now();
    let mut checked = 0;
    for t in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(2_000 + t);
        let n = rng.gen_range(5..=12);
        let k = rng.gen_range(1..=4);
        let a = alpha(ALPHA_CHOICES[rng.gen_range(0..4)]);
        let inst = synth::random_front(n, 60_000 + t).unwrap();
        let dp = solve_general(&inst, k, a, true).unwrap();
        let (best, interval) = brute_force_partitions(&inst, k, a).unwrap();
        assert!(
            rel_close(dp.total(), best.total, 1e-9),
            "trial {t}: dp {} vs all-partitions {}",
            dp.total(),
            best.total
        );
        assert!(
            interval,
            "trial {t}: unrestricted optimum not realizable as contiguous ranges"
        );
        checked += 1;
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 120.0, "took {secs:.1} s");
    println!(
        "PASS criterion 02: dp == all-partitions oracle on {checked} instances, \
         every winner realizable with contiguous ranges, in {secs:.1} s"
    );
}

/// Exhaustive smallest-index argmin over *all* centers, endpoints included —
/// deliberately independent of the production candidate restrictions.
fn exhaustive_center(inst: &ParetoInstance, lo: usize, hi: usize, a: Alpha) -> (f64, usize) {
    let mut best = f64::INFINITY;
    let mut best_c = lo;
    for c in lo..=hi {
        let mut s = 0.0;
        for t in lo..=hi {
            s += dist_pow(inst[t], inst[c], a);
        }
        if s < best {
            best = s;
            best_c = c;
        }
    }
    (best, best_c)
}

#[test]
fn criterion_03_structural_lemmas_hold() {
    let mut violations = 0u64;
    let mut triples = 0u64;
    let mut intervals = 0u64;
    for t in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(3_000 + t);

        // Dominance is transitive. Quantized coordinates make comparable
        // pairs frequent.
        let pts: Vec<Point2> = (0..12)
            .map(|_| Point2::new(rng.gen_range(0..5) as f64, rng.gen_range(0..5) as f64))
            .collect();
        for u in &pts {
            for v in &pts {
                for w in &pts {
                    if dominates(*u, *v) && dominates(*v, *w) {
                        triples += 1;
                        if !dominates(*u, *w) {
                            violations += 1;
                        }
                    }
                }
            }
        }

        let n = rng.gen_range(5..=40);
        let inst = synth::random_front(n, 80_000 + t).unwrap();
        for av in [1.0, 2.0] {
            let a = alpha(av);

            // On an ordered front, widening an index pair strictly widens
            // the distance.
            for i in 0..n {
                for j in i + 1..n {
                    for l in j + 1..n {
                        let d_ij = dist_pow(inst[i], inst[j], a);
                        let d_il = dist_pow(inst[i], inst[l], a);
                        let d_jl = dist_pow(inst[j], inst[l], a);
                        if !(d_ij < d_il && d_jl < d_il) {
                            violations += 1;
                        }
                    }
                }
            }

            // One exhaustive (cost, center) per contiguous range.
            let mut cost = vec![vec![0.0f64; n]; n];
            let mut med = vec![vec![0usize; n]; n];
            for lo in 0..n {
                for hi in lo..n {
                    let (c, m) = exhaustive_center(&inst, lo, hi, a);
                    cost[lo][hi] = c;
                    med[lo][hi] = m;
                    intervals += 1;
                    // The production evaluator agrees with the unrestricted
                    // argmin — in particular endpoints never win.
                    let naive = cluster_cost_naive(&inst, lo, hi, a).unwrap();
                    if naive.medoid != m || !rel_close(naive.cost, c, 1e-12) {
                        violations += 1;
                    }
                }
            }
            for lo in 0..n {
                for hi in lo..n {
                    // Interior center for any range of three or more points.
                    if hi - lo >= 2 && !(med[lo][hi] > lo && med[lo][hi] < hi) {
                        violations += 1;
                    }
                    // Cost is monotone under range inclusion.
                    if hi + 1 < n && cost[lo][hi] > cost[lo][hi + 1] * (1.0 + 1e-12) + 1e-300 {
                        violations += 1;
                    }
                    if lo > 0 && cost[lo][hi] > cost[lo - 1][hi] * (1.0 + 1e-12) + 1e-300 {
                        violations += 1;
                    }
                    // The smallest-index center never moves left when the
                    // range gains a point on the right or loses its leftmost.
                    if hi + 1 < n && med[lo][hi] > med[lo][hi + 1] {
                        violations += 1;
                    }
                    if lo > 0 && med[lo - 1][hi] > med[lo][hi] {
                        violations += 1;
                    }
                }
            }
        }
    }
    assert_eq!(violations, 0, "structural lemma violations found");
    println!(
        "PASS criterion 03: zero violations across 100 instances \
         ({triples} dominance triples, {intervals} ranges, two exponents)"
    );
}

#[test]
fn criterion_04_dichotomic_exact_and_logarithmic() {
    let mut max_ratio = 0.0f64;
    for n in [100usize, 1_000, 10_000] {
        let fronts = [
            ("convex", synth::convex_front(n).unwrap()),
            ("concave", synth::concave_front(n).unwrap()),
        ];
        for (name, inst) in &fronts {
            for av in [1.0, 2.0] {
                let a = alpha(av);
                let naive = cluster_cost_naive(inst, 0, n - 1, a).unwrap();
                let (dich, probes) = cluster_cost_dichotomic_counted(inst, 0, n - 1, a).unwrap();
                assert_eq!(
                    dich.cost, naive.cost,
                    "{name} n={n} alpha={av}: cost mismatch"
                );
                assert_eq!(
                    dich.medoid, naive.medoid,
                    "{name} n={n} alpha={av}: center mismatch"
                );
                let bound = 2.0 * (n as f64).log2() + 4.0;
                assert!(
                    (probes as f64) <= bound,
                    "{name} n={n} alpha={av}: {probes} probes > {bound:.1}"
                );
                max_ratio = max_ratio.max(probes as f64 / bound);
            }
        }
    }
    println!(
        "PASS criterion 04: bisection cost identical to exhaustive on curved fronts \
         up to n=10000; worst probe usage {:.0}% of the 2*log2(n)+4 budget",
        max_ratio * 100.0
    );
}

#[test]
fn criterion_05_whole_front_center_cost_not_unimodal() {
    let witness = find_non_unimodal_witness(1_000_000, 424_242)
        .expect("randomized search found no witness within the trial budget");
    let inst = &witness.instance;
    let n = inst.len();
    let a = witness.alpha;
    assert!(a.value() == 1.0 || a.value() == 2.0);
    // Independent recomputation of the center-cost sequence.
    let d: Vec<f64> = (0..n)
        .map(|c| (0..n).map(|t| dist_pow(inst[t], inst[c], a)).sum())
        .collect();
    let p = witness.peak;
    assert!(p > 0 && p < n - 1, "peak must be interior");
    assert!(
        d[p] > d[p - 1] && d[p] > d[p + 1],
        "claimed peak is not a strict local maximum: {d:?}"
    );
    println!(
        "PASS criterion 05: found n={n} front whose center-cost sequence has an \
         interior peak at index {p} for exponent {} — bisection needs its shape guard",
        a.value()
    );
}

#[test]
fn criterion_06_two_cluster_solver_and_enumerator() {
    let corpus = corpus();
    let mut minima_total = 0usize;
    for (idx, (inst, _, a)) in corpus.iter().enumerate() {
        let n = inst.len();
        let fast = solve_k2(inst, *a, true).unwrap();
        let brute = brute_force_interval(inst, 2, *a).unwrap();
        assert!(
            rel_close(fast.total(), brute.total(), 1e-9),
            "instance {idx}: k2 {} vs oracle {}",
            fast.total(),
            brute.total()
        );
        assert_eq!(fast.breaks(), brute.breaks(), "instance {idx}");

        let reports = local_minima_k2(inst, *a).unwrap();
        assert!(reports.len() < n, "instance {idx}: too many reports");
        let best_split = fast.breaks()[0] - 1;
        assert!(
            reports.iter().any(|r| r.split == best_split),
            "instance {idx}: optimal split missing from enumeration"
        );
        for r in &reports {
            let mut assignment = vec![1usize; n];
            for item in assignment.iter_mut().take(r.split + 1) {
                *item = 0;
            }
            let cand = PartitionCandidate {
                assignment,
                medoids: vec![r.prefix_medoid, r.suffix_medoid],
                total: r.total,
            };
            assert!(
                is_local_minimum(inst, &cand, *a).unwrap(),
                "instance {idx}: reported split {} is not locally optimal",
                r.split
            );
        }
        minima_total += reports.len();
    }
    println!(
        "PASS criterion 06: two-cluster solver matches oracle on {} instances; \
         all {minima_total} enumerated local minima verified, counts within n-1",
        corpus.len()
    );
}

#[test]
fn criterion_07_pruning_is_lossless_and_saves_work() {
    let corpus = corpus();
    let mut large = 0usize;
    let mut strictly_cheaper = 0usize;
    for (idx, (inst, k, a)) in corpus.iter().enumerate() {
        let pruned = solve_general(inst, *k, *a, true).unwrap();
        let full = solve_general(inst, *k, *a, false).unwrap();
        assert_eq!(
            pruned.total(),
            full.total(),
            "instance {idx}: pruning changed the total"
        );
        assert_eq!(pruned.breaks(), full.breaks(), "instance {idx}");
        assert_eq!(pruned.medoids(), full.medoids(), "instance {idx}");

        if inst.len() >= 30 {
            large += 1;
            let (_, s_on) = solve_k2_with_stats(inst, *a, true).unwrap();
            let (_, s_off) = solve_k2_with_stats(inst, *a, false).unwrap();
            if s_on.cost_evals < s_off.cost_evals {
                strictly_cheaper += 1;
            }
        }
    }
    let frac = strictly_cheaper as f64 / large as f64;
    assert!(
        frac >= 0.9,
        "pruned two-cluster solve cheaper on only {strictly_cheaper}/{large} large instances"
    );
    println!(
        "PASS criterion 07: prune on/off bit-identical on {} instances; pruned k=2 \
         evaluated strictly fewer terms on {strictly_cheaper}/{large} instances with n>=30",
        corpus.len()
    );
}

#[test]
fn criterion_08_alternation_heuristic_is_dominated_and_locally_optimal() {
    let mut converged_count = 0usize;
    for t in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(8_000 + t);
        let n = rng.gen_range(5..=60);
        let k = rng.gen_range(1..=6.min(n));
        let a = alpha(ALPHA_CHOICES[rng.gen_range(0..4)]);
        let inst = synth::random_front(n, 70_000 + t).unwrap();
        let (cand, converged) = pam_heuristic(&inst, k, a, t, 500).unwrap();
        let exact = solve_general(&inst, k, a, true).unwrap();
        assert!(
            exact.total() <= cand.total + 1e-9 * cand.total.abs().max(1.0),
            "pair {t}: exact {} above heuristic {}",
            exact.total(),
            cand.total
        );
        if converged {
            converged_count += 1;
            assert!(
                is_local_minimum(&inst, &cand, a).unwrap(),
                "pair {t}: fixed point fails local optimality"
            );
            assert!(
                cand.is_interval(),
                "pair {t}: fixed point clusters are not contiguous"
            );
        }
    }
    assert!(converged_count >= 90, "only {converged_count} runs converged");
    println!(
        "PASS criterion 08: exact total <= heuristic total on 100 pairs; \
         {converged_count}/100 fixed points, all locally optimal with contiguous clusters"
    );
}

#[test]
fn criterion_09_thousand_point_dp_is_fast_and_lean() {
    let n = 1_000usize;
    let k = 10usize;
    let inst = synth::random_front(n, 99_991).unwrap();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let start = Instant::now();
    let (clustering, stats) =
        pool.install(|| solve_general_with_stats(&inst, k, alpha(2.0), true).unwrap());
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 10.0, "single-worker solve took {secs:.2} s");
    assert_eq!(clustering.k(), k);
    // Working set stays proportional to k*n: the table holds exactly k*n
    // cells and scratch a small multiple of n — nothing anywhere near n*n.
    assert_eq!(stats.dp_cells, k * n);
    assert!(
        stats.peak_scratch <= 12 * n,
        "scratch {} exceeds 12n",
        stats.peak_scratch
    );
    assert!(stats.dp_cells + stats.peak_scratch < n * n / 10);
    println!(
        "PASS criterion 09: n=1000 k=10 solved single-worker in {secs:.2} s; \
         table {} cells + scratch {} elements (vs n^2 = {})",
        stats.dp_cells,
        stats.peak_scratch,
        n * n
    );
}

#[test]
fn criterion_10_worker_count_never_changes_rendered_output() {
    let pool1 = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let pool4 = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap();
    for t in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(4_000 + t);
        // The first few sizes exceed the parallel threshold so the threaded
        // kernels actually run; the rest sample small sizes.
        let n = if t < 5 {
            560 + 35 * t as usize
        } else {
            rng.gen_range(20..=500)
        };
        let k = rng.gen_range(2..=6);
        let a = alpha(ALPHA_CHOICES[rng.gen_range(0..4)]);
        let inst = synth::random_front(n, 90_000 + t).unwrap();
        let render = |pool: &rayon::ThreadPool| {
            pool.install(|| {
                let c = solve_general(&inst, k, a, true).unwrap();
                SolveReport::from_clustering(&inst, a, "dp", &c).to_json()
            })
        };
        let one = render(&pool1);
        let four = render(&pool4);
        assert_eq!(one, four, "instance {t} (n={n}): output differs by worker count");
    }
    println!(
        "PASS criterion 10: identical rendered bytes for 1 and 4 workers on 20 instances"
    );
}
