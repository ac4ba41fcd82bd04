//! Acceptance runner. Each criterion is checked against oracles written
//! here from first principles (brute-force enumeration, plain BFS, trace
//! identities) and prints one PASS/FAIL line. Exits non-zero if any fails.

use std::collections::VecDeque;
use std::fs;
use std::panic;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use ramsey_forge::algebra::{odd_primes, predicted_intersections, predicted_intersections_null, FieldSpec};
use ramsey_forge::certify::{run_sweep, verify_circle_lemma, Status, SweepConfig};
use ramsey_forge::exactmetrics::{
    diameter, eccentricity_uniformity_check, exact_independence, exact_max_cut_and_bisection,
    exact_toughness, girth, is_independent, triangle_count, Length, Toughness,
};
use ramsey_forge::graphs::{alon_connection_set, bch_connection_set, build, euclidean_connection_set};
use ramsey_forge::spectral::{
    alon_toughness_bound, cayley_spectrum_abelian, dense_spectrum, ratio_independence_bound,
    SpectralSummary,
};
use ramsey_forge::{FamilySpec, Graph, Limits};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

// ---------------------------------------------------------------- oracles

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Euler's criterion.
fn chi(x: i64, q: u32) -> i64 {
    let x = x.rem_euclid(q as i64) as u64;
    if x == 0 {
        0
    } else if pow_mod(x, (q as u64 - 1) / 2, q as u64) == 1 {
        1
    } else {
        -1
    }
}

fn inv_mod(x: i64, q: u32) -> i64 {
    pow_mod(x.rem_euclid(q as i64) as u64, q as u64 - 2, q as u64) as i64
}

fn dense(g: &Graph) -> SpectralSummary {
    let l = Limits::default();
    dense_spectrum(g, l.dense_max_n, l.jacobi_max_sweeps).expect("dense spectrum")
}

fn bfs(g: &Graph, s: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            let w = w as usize;
            if dist[w] == u32::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Max eccentricity over every source; None if disconnected.
fn diameter_all_sources(g: &Graph) -> Option<u32> {
    (0..g.n())
        .map(|s| bfs(g, s).into_iter().max().filter(|&d| d != u32::MAX))
        .try_fold(0, |acc, e| e.map(|e| acc.max(e)))
}

/// Shortest cycle, from a BFS tree at every root.
fn girth_all_sources(g: &Graph) -> Option<u32> {
    let mut best = u32::MAX;
    for s in 0..g.n() {
        let mut dist = vec![u32::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                let w = w as usize;
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != u32::MAX).then_some(best)
}

/// Triangles by merging sorted neighbor lists over edges u < v, counting w > v.
fn triangles_by_merge(g: &Graph) -> u64 {
    let mut sorted: Vec<Vec<u32>> = (0..g.n()).map(|u| g.neighbors(u).to_vec()).collect();
    for l in &mut sorted {
        l.sort_unstable();
    }
    let mut count = 0;
    for u in 0..g.n() {
        for &v in sorted[u].iter().filter(|&&v| v as usize > u) {
            let (a, b) = (&sorted[u], &sorted[v as usize]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        count += u64::from(a[i] > v);
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    count
}

fn masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64);
    (0..g.n()).map(|u| g.neighbors(u).iter().fold(0u64, |m, &w| m | 1 << w)).collect()
}

fn components_outside(adj: &[u64], removed: u64) -> u32 {
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut left = all & !removed;
    let mut count = 0;
    while left != 0 {
        let mut frontier = left & left.wrapping_neg();
        let mut seen = frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & left & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        left &= !seen;
        count += 1;
    }
    count
}

/// min |S| / c(G - S) over S with c >= 2, as (num, den); None if none exists.
fn toughness_brute(g: &Graph) -> Option<(u64, u64)> {
    let adj = masks(g);
    let mut best: Option<(u64, u64)> = None;
    for s in 0u64..1 << g.n() {
        let c = components_outside(&adj, s) as u64;
        if c < 2 {
            continue;
        }
        let k = s.count_ones() as u64;
        if best.map_or(true, |(bn, bd)| k * bd < bn * c) {
            best = Some((k, c));
        }
    }
    best
}

/// (bip, bisection) by enumerating every vertex subset.
fn cuts_brute(g: &Graph) -> (usize, usize) {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let (mut bip, mut bis) = (0, usize::MAX);
    for s in 0u64..1 << n {
        let size = s.count_ones() as usize;
        if size > n / 2 {
            continue;
        }
        let cut = edges.iter().filter(|&&(u, v)| (s >> u & 1) != (s >> v & 1)).count();
        bip = bip.max(cut);
        if size == n / 2 {
            bis = bis.min(cut);
        }
    }
    (bip, bis)
}

/// Maximum independent set size on <= 64 vertices: branch on a vertex of
/// maximum degree within the candidate set.
fn alpha_brute(adj: &[u64], cand: u64, size: u32, best: &mut u32) {
    if size + cand.count_ones() <= *best {
        return;
    }
    let mut pick = None;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones();
        if d >= 1 && pick.map_or(true, |(_, pd)| d > pd) {
            pick = Some((v, d));
        }
    }
    match pick {
        None => *best = (*best).max(size + cand.count_ones()),
        Some((v, _)) => {
            alpha_brute(adj, cand & !(1 << v) & !adj[v], size + 1, best);
            alpha_brute(adj, cand & !(1 << v), size, best);
        }
    }
}

fn alpha(g: &Graph) -> u32 {
    let adj = masks(g);
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = 0;
    alpha_brute(&adj, all, 0, &mut best);
    best
}

/// Trace identities Σλ = 0, Σλ² = nd and λ1 = d.
fn trace_ok(s: &SpectralSummary) -> bool {
    let n = s.eigenvalues.len() as f64;
    let d = s.degree as f64;
    let sum: f64 = s.eigenvalues.iter().sum();
    let sq: f64 = s.eigenvalues.iter().map(|x| x * x).sum();
    sum.abs() < 1e-6 * n.max(1.0) && (sq - n * d).abs() < 1e-6 * n * d && (s.eigenvalues[0] - d).abs() < 1e-6
}

fn euclidean(q: u32) -> Graph {
    build(&FamilySpec::euclidean(q, 2, 1).unwrap(), u64::MAX).unwrap()
}

fn smallest_nonsquare(q: u32) -> u32 {
    (2..q).find(|&x| chi(x as i64, q) == -1).unwrap()
}

// --------------------------------------------------------------- criteria

fn circle_lemmas() -> Outcome {
    let mut checked = 0u64;
    let mut isotropic = Vec::new();
    let mut problems = Vec::new();
    for q in [3u32, 5, 7, 11, 13] {
        let f = FieldSpec::new(q).unwrap();
        let qi = q as i64;
        let quad = |x: (i64, i64), y: (i64, i64)| ((x.0 - y.0).pow(2) + (x.1 - y.1).pow(2)).rem_euclid(qi) as usize;
        let points: Vec<(i64, i64)> = (0..qi).flat_map(|a| (0..qi).map(move |b| (a, b))).collect();
        let mut null_pairs = 0;
        for &x in &points {
            for &y in &points {
                if x == y {
                    continue;
                }
                let k = quad(x, y);
                let mut table = vec![vec![0u32; q as usize]; q as usize];
                for &z in &points {
                    table[quad(x, z)][quad(y, z)] += 1;
                }
                null_pairs += u32::from(k == 0);
                for i in 1..q as usize {
                    for j in 1..q as usize {
                        let got = table[i][j];
                        let (formula, library) = if k == 0 {
                            (
                                u32::from(i != j),
                                predicted_intersections_null(f.elem(i as u64), f.elem(j as u64)).unwrap(),
                            )
                        } else {
                            let t = (k as i64 - i as i64 - j as i64).rem_euclid(qi);
                            let fv = (i as i64 * j as i64 - t * t % qi * inv_mod(4, q)).rem_euclid(qi);
                            (
                                (1 + chi(fv, q)) as u32,
                                predicted_intersections(f.elem(i as u64), f.elem(j as u64), f.elem(k as u64)).unwrap(),
                            )
                        };
                        checked += 1;
                        if got != formula || got != library {
                            problems.push(format!("q={q} X={x:?} Y={y:?} i={i} j={j}: {got} vs {formula}/{library}"));
                        }
                    }
                }
            }
        }
        if q % 4 == 1 {
            isotropic.push((q, null_pairs));
        }
        let cert = verify_circle_lemma(q).unwrap();
        if cert.status != Status::Pass || !cert.recheck().is_empty() {
            problems.push(format!("q={q}: certificate {:?}", cert.status));
        }
    }
    let iso_ok = isotropic.iter().all(|&(_, n)| n > 0);
    outcome(
        problems.is_empty() && iso_ok,
        format!(
            "{checked} (X, Y, i, j) counts checked, {} mismatches; isotropic ordered pairs {isotropic:?}{}",
            problems.len(),
            problems.first().map(|p| format!("; first: {p}")).unwrap_or_default()
        ),
    )
}

fn girth_theorem() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for q in [7u32, 19, 31, 13, 37] {
        let g = euclidean(q);
        let expected = if chi(3, q) == 1 { 3 } else { 4 };
        let oracle = girth_all_sources(&g);
        let lib = girth(&g, true);
        ok &= oracle == Some(expected) && lib == Length::Finite(expected);
        parts.push(format!("q={q}: {lib} (oracle {oracle:?}, expected {expected})"));
    }
    outcome(ok, parts.join(", "))
}

fn diameter_theorem() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for q in [7u32, 11, 19, 23, 31, 5, 13, 17, 29] {
        let g = euclidean(q);
        let uniform = eccentricity_uniformity_check(&g, 8).unwrap();
        let lib = diameter(&g, true);
        let oracle = diameter_all_sources(&g);
        let allowed: &[u32] = if q % 4 == 3 { &[3] } else { &[3, 4] };
        let good = uniform && lib.finite() == oracle && oracle.is_some_and(|d| allowed.contains(&d));
        ok &= good;
        parts.push(format!("q={q}: {lib}{}", if uniform { "" } else { " (non-uniform)" }));
    }
    outcome(ok, parts.join(", "))
}

fn degree_formula() -> Outcome {
    let mut cases = 0;
    let mut literal_misses = Vec::new();
    let mut builder_misses = 0;
    for q in [3u32, 5, 7, 11, 13] {
        for m in [2u32, 3, 4] {
            let n = (q as u64).pow(m);
            if n > 30_000 {
                continue;
            }
            let mut sphere = vec![0u64; q as usize];
            for v in 0..n {
                let mut rest = v;
                let mut s = 0u64;
                for _ in 0..m {
                    let x = rest % q as u64;
                    s += x * x;
                    rest /= q as u64;
                }
                sphere[(s % q as u64) as usize] += 1;
            }
            let (qi, mi) = (q as i64, m as i64);
            let literal = if m % 2 == 1 {
                qi.pow(m - 1) + chi((-1i64).pow(((mi - 1) / 2) as u32), q) * qi.pow((m - 1) / 2)
            } else {
                qi.pow(m - 1) - chi((-1i64).pow((mi / 2) as u32), q) * qi.pow((m - 2) / 2)
            };
            for a in 1..q {
                cases += 1;
                let brute = sphere[a as usize];
                if euclidean_connection_set(q, m, a).len() as u64 != brute {
                    builder_misses += 1;
                }
                if brute as i64 != literal {
                    literal_misses.push(format!("(q={q}, m={m}, a={a}): {brute} vs {literal}"));
                }
            }
        }
    }
    outcome(
        literal_misses.is_empty() && builder_misses == 0,
        format!(
            "{cases} (q, m, a) cases; builder agrees with brute count in {} of them; \
             formula without a in the character misses {} (all odd m with non-square a), e.g. {}",
            cases - builder_misses,
            literal_misses.len(),
            literal_misses.iter().take(3).cloned().collect::<Vec<_>>().join(", ")
        ),
    )
}

fn ramanujan() -> Outcome {
    let mut ok = true;
    let mut worst_ratio: f64 = 0.0;
    let mut max_dev: f64 = 0.0;
    let mut graphs = 0;
    let mut problems = Vec::new();
    let mut check = |s: &SpectralSummary, q: u32, label: String, problems: &mut Vec<String>| {
        let cap = 2.0 * (q as f64).sqrt();
        let top = s.eigenvalues.iter().skip(1).map(|x| x.abs()).fold(0.0, f64::max);
        worst_ratio = worst_ratio.max(top / cap);
        if top > cap + 1e-6 || !trace_ok(s) {
            problems.push(label);
            return false;
        }
        true
    };
    for q in odd_primes(3, 31) {
        let g = euclidean(q);
        let d = dense(&g);
        let c = cayley_spectrum_abelian(g.family().unwrap()).unwrap();
        max_dev = max_dev.max(d.max_deviation(&c));
        ok &= check(&d, q, format!("D_{q}"), &mut problems) & check(&c, q, format!("D_{q} character"), &mut problems);
        graphs += 1;
    }
    for q in odd_primes(3, 17) {
        let sigma = smallest_nonsquare(q);
        for a in 1..q {
            let Ok(family) = FamilySpec::non_euclidean(q, sigma, a) else { continue };
            let g = build(&family, u64::MAX).unwrap();
            ok &= check(&dense(&g), q, family.to_string(), &mut problems);
            graphs += 1;
        }
    }
    ok &= max_dev <= 1e-6;
    outcome(
        ok,
        format!(
            "{graphs} graphs; max |λ| / 2√q over nontrivial eigenvalues {worst_ratio:.4}; \
             dense vs character max deviation {max_dev:.1e}; violations {problems:?}"
        ),
    )
}

fn triangle_freeness() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    let mut run = |family: FamilySpec, want_zero: bool| {
        let g = build(&family, u64::MAX).unwrap();
        let lib = triangle_count(&g);
        let oracle = triangles_by_merge(&g);
        ok &= lib == oracle && (lib == 0) == want_zero;
        parts.push(format!("{family}: {lib}"));
    };
    for q in [7, 19, 31, 43, 67, 79, 103] {
        run(FamilySpec::euclidean(q, 2, 1).unwrap(), true);
    }
    for q in [17, 29, 41, 53, 89, 101] {
        run(FamilySpec::non_euclidean(q, 3, 6).unwrap(), true);
    }
    run(FamilySpec::euclidean(13, 2, 1).unwrap(), false);
    outcome(ok, parts.join(", "))
}

fn toughness_chain() -> Outcome {
    let bound = alon_toughness_bound(4.0, 2.0).unwrap();
    let mut ok = (bound - 1.0 / 9.0).abs() < 1e-12;
    let mut parts = vec![format!("bound(4, 2) = {bound:.6}")];
    for (name, g, expected) in [
        ("D_3(1)", euclidean(3), None),
        ("P_3", Graph::path(3), Some((1, 2))),
        ("C_5", Graph::cycle(5), Some((1, 1))),
    ] {
        let lib = exact_toughness(&g, 16).unwrap().value;
        let (num, den) = toughness_brute(&g).unwrap();
        let brute = Toughness::ratio(num, den);
        ok &= lib == brute && expected.map_or(true, |(a, b)| lib == Toughness::ratio(a, b));
        if expected.is_none() {
            ok &= lib.exceeds(bound);
        }
        parts.push(format!("{name} = {lib}"));
    }
    outcome(ok, parts.join(", "))
}

fn independence_chain() -> Outcome {
    let limits = Limits::default();
    let mut ok = true;
    let mut parts = Vec::new();

    let d3 = euclidean(3);
    let r = exact_independence(&d3, limits.independence_max_n, limits.node_budget).unwrap();
    let bound = ratio_independence_bound(9.0, 4.0, 6.0);
    ok &= r.exact && r.size == 3 && alpha(&d3) == 3 && (bound - 3.0).abs() < 1e-12;
    parts.push(format!("α(D_3) = {} (ratio bound {bound})", r.size));

    let d7 = euclidean(7);
    let r = exact_independence(&d7, limits.independence_max_n, limits.node_budget).unwrap();
    let theta_n = dense(&d7).theta_n;
    let ratio = ratio_independence_bound(49.0, 8.0, theta_n);
    let cap = 2.0 * 7f64.powf(1.5);
    ok &= r.exact
        && is_independent(&d7, &r.witness)
        && r.size as u32 == alpha(&d7)
        && (r.size as f64) <= cap
        && (r.size as f64) <= ratio + 1e-6;
    parts.push(format!("α(D_7) = {} (2·7^1.5 = {cap:.2}, ratio bound {ratio:.4})", r.size));

    for k in [2, 3] {
        let g = build(&FamilySpec::bch(k).unwrap(), u64::MAX).unwrap();
        let r = exact_independence(&g, limits.independence_max_n, limits.node_budget).unwrap();
        let cap = 2.0 * (g.n() as f64).powf(0.75);
        ok &= r.exact && r.size as u32 == alpha(&g) && (r.size as f64) <= cap;
        parts.push(format!("α(BCH_{k}) = {} (2n^3/4 = {cap:.2})", r.size));
    }
    outcome(ok, parts.join(", "))
}

fn cut_bounds() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, g) in [("D_3(1)", euclidean(3)), ("C_4", Graph::cycle(4)), ("C_5", Graph::cycle(5))] {
        let lib = exact_max_cut_and_bisection(&g, 20).unwrap();
        let (bip, bis) = cuts_brute(&g);
        let s = dense(&g);
        let cap = g.n() as f64 * s.theta_n / 4.0;
        ok &= lib.bip == bip && lib.bisection == bis && bip as f64 <= cap + 1e-6;
        parts.push(format!("{name}: bip {bip} <= {cap:.4}, bisection {bis}"));
    }
    for n in [4usize, 5] {
        let analytic = 2.0 - 2.0 * (2.0 * std::f64::consts::PI * (n / 2) as f64 / n as f64).cos();
        ok &= (dense(&Graph::cycle(n)).theta_n - analytic).abs() < 1e-9;
    }

    let d7 = dense(&euclidean(7));
    let spectral_bip = 49.0 * d7.theta_n / 4.0;
    let e: f64 = 49.0 * 8.0 / 2.0;
    let corollary = e / 2.0 + e.powf(5.0 / 6.0) / 2.0;
    let holds = spectral_bip <= corollary + 1e-6;
    ok &= holds;
    parts.push(format!(
        "D_7(1): spectral bip bound nθn/4 = {spectral_bip:.4} {} e/2 + e^(5/6)/2 = {corollary:.4} (e = {e})",
        if holds { "<=" } else { ">" }
    ));
    outcome(ok, parts.join("; "))
}

fn non_euclidean_diameter() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    let v5 = build(&FamilySpec::non_euclidean(5, 2, 4).unwrap(), u64::MAX).unwrap();
    let d = diameter_all_sources(&v5);
    ok &= d == Some(2) && diameter(&v5, true) == Length::Finite(2);
    parts.push(format!("V_5(2,4): {d:?}"));

    let (q, sigma) = (13u32, 2u32);
    for a in 1..q {
        let Ok(family) = FamilySpec::non_euclidean(q, sigma, a) else { continue };
        let g = build(&family, u64::MAX).unwrap();
        let measured = diameter_all_sources(&g);
        let expected = if a == 2 * sigma % q || chi(sigma as i64 - a as i64, q) >= 0 { 3 } else { 4 };
        ok &= measured == Some(expected) && diameter(&g, true).finite() == measured;
        parts.push(format!("a={a}: {} (rule {expected})", measured.map_or("inf".into(), |d| d.to_string())));
    }
    outcome(ok, format!("{}; V_13(2,a) {}", parts[0], parts[1..].join(", ")))
}

fn code_graphs() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for k in [2u32, 3, 4] {
        let g = build(&FamilySpec::bch(k).unwrap(), u64::MAX).unwrap();
        let conn = bch_connection_set(k).unwrap();
        let xor_ok = (0..g.n()).all(|u| {
            let mut nb: Vec<u32> = g.neighbors(u).iter().map(|&w| w ^ u as u32).collect();
            nb.sort_unstable();
            nb == conn
        });
        let t = triangles_by_merge(&g);
        let d = (1usize << k) - 1;
        ok &= g.n() == 1 << (2 * k) && g.regular_degree() == Some(d) && xor_ok && t == 0 && triangle_count(&g) == 0;
        parts.push(format!("BCH_{k}: n={} degree {:?} triangles {t}", g.n(), g.regular_degree()));
    }
    for k in [2u32, 4] {
        let c = alon_connection_set(k).unwrap();
        let half = 1usize << (k - 1);
        let mut sums: Vec<u32> = Vec::new();
        let g = build(&FamilySpec::alon(k).unwrap(), u64::MAX).unwrap();
        for u in 0..g.n() {
            for &w in g.neighbors(u) {
                sums.push(w ^ u as u32);
            }
        }
        sums.sort_unstable();
        sums.dedup();
        let claimed = half * (half - 1);
        ok &= c.w0.len() == half - 1 && c.w1.len() == half && g.regular_degree() == Some(c.sums.len()) && sums == c.sums;
        parts.push(format!(
            "Alon_{k}: |W0|={} |W1|={} degree {} (claimed {claimed}, {} raw sums, {} zero)",
            c.w0.len(),
            c.w1.len(),
            c.sums.len(),
            c.raw_sums,
            c.zero_sums
        ));
    }
    outcome(ok, parts.join(", "))
}

fn determinism() -> Outcome {
    let cfg: SweepConfig = serde_json::from_str(
        r#"{"q_min": 3, "q_max": 31, "families": ["euclidean", "noneuclidean"],
            "limits": {"node_budget": 200000}}"#,
    )
    .unwrap();
    let dir = tempfile::tempdir().unwrap();
    let mut snapshots = Vec::new();
    for threads in [1, 4] {
        let out = dir.path().join(format!("threads{threads}"));
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| run_sweep(&cfg, &out)).unwrap();
        snapshots.push(read_tree(&out));
    }
    let files = snapshots[0].len();
    let bytes: usize = snapshots[0].iter().map(|(_, b)| b.len()).sum();
    outcome(
        files > 1 && snapshots[0] == snapshots[1],
        format!("{files} files ({bytes} bytes) compared across 1 and 4 threads"),
    )
}

fn read_tree(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap())
        })
        .collect();
    files.sort();
    files
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, f64, fn() -> Outcome); 12] = [
        (1, "circle-intersection lemmas", 30.0, circle_lemmas),
        (2, "girth of D_q(1)", 60.0, girth_theorem),
        (3, "diameter of D_q(1)", 120.0, diameter_theorem),
        (4, "degree formula", 60.0, degree_formula),
        (5, "Ramanujan bound", 600.0, ramanujan),
        (6, "triangle-freeness at scale", 300.0, triangle_freeness),
        (7, "toughness chain", 1.0, toughness_chain),
        (8, "independence chain", 300.0, independence_chain),
        (9, "cut bounds", 30.0, cut_bounds),
        (10, "non-Euclidean diameter", 60.0, non_euclidean_diameter),
        (11, "code graphs", 60.0, code_graphs),
        (12, "sweep determinism", f64::INFINITY, determinism),
    ];
    let mut failed = Vec::new();
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(run);
        let secs = start.elapsed().as_secs_f64();
        let o = result.unwrap_or_else(|_| outcome(false, "panicked"));
        let in_time = secs < limit;
        let ok = o.ok && in_time;
        let limit = if limit.is_finite() { format!(", limit {limit} s") } else { String::new() };
        println!(
            "criterion {id:>2} {} {name}: {}{} ({secs:.2} s{limit})",
            if ok { "PASS" } else { "FAIL" },
            o.detail,
            if in_time { "" } else { "; over time" }
        );
        if !ok {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("all 12 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("failing criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
