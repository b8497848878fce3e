//! Machine-checkable verification suites over finite ranges.
//!
//! Each suite runs a family of exact checks and returns a [`Report`] listing
//! every failing case with its inputs and the expected/actual values, so a
//! violation can be replayed immediately. All checks are exact: integer
//! identities are evaluated in `BigInt`, ratio comparisons go through
//! cross-multiplication.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::bricks::{construct_brick, quasi_length_options};
use crate::components::{
    dimset_equal, length_census, node_dim, samelength_pair_search, ComponentSeed, NodeCoord,
};
use crate::roots::{coxeter_apply, is_imaginary, DimVector};
use crate::sequences::SeqCache;

/// One failing check.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of a verification suite. The process exit convention is
/// zero failures ⇔ success; wall time is informational and deliberately
/// kept out of the serialized form so identical runs print identically.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub wall_ms: u128,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            cases: 0,
            failures: Vec::new(),
            wall_ms: 0,
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, cond: bool, input: impl Fn() -> String, expected: &str, actual: &str) {
        self.cases += 1;
        if !cond {
            self.failures.push(Failure {
                input: input(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn check_eq(&mut self, lhs: &BigInt, rhs: &BigInt, input: impl Fn() -> String) {
        self.cases += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                input: input(),
                expected: rhs.to_string(),
                actual: lhs.to_string(),
            });
        }
    }

    fn finish(mut self, started: std::time::Instant) -> Self {
        self.wall_ms = started.elapsed().as_millis();
        self
    }
}

fn imaginary_vectors(n: u32, max_a: i64, max_b: i64) -> Vec<DimVector> {
    let mut out = Vec::new();
    for a in 1..=max_a {
        for b in 1..=max_b {
            let v = DimVector::from_i64(a, b);
            if is_imaginary(n, &v) {
                out.push(v);
            }
        }
    }
    out
}

fn imaginary_roots_by_sum(n: u32, sum_bound: i64) -> Vec<DimVector> {
    let mut out = Vec::new();
    for a in 1..sum_bound {
        for b in 1..=(sum_bound - a) {
            let v = DimVector::from_i64(a, b);
            if is_imaginary(n, &v) {
                out.push(v);
            }
        }
    }
    out
}

/// Identities of the `A` and `B` sequences: the recurrence, the five
/// quadratic identities, `n·s_r = A_{r+1}`, the even-index addition formula
/// for `B` (with its odd-index failure for `n ≥ 4`), the odd-step relation,
/// monotonicity, and the equal-sum orbit lemma.
pub fn identities_suite(n_lo: u32, n_hi: u32, upto: usize) -> Report {
    let start = std::time::Instant::now();
    let mut rep = Report::new("identities");
    for n in n_lo..=n_hi {
        let Ok(mut c) = SeqCache::new(n) else {
            rep.check(false, || format!("n={n}"), "n >= 3", "invalid");
            continue;
        };
        let n_big = BigInt::from(n);

        for i in 1..=upto {
            let lhs = c.a(i + 2);
            let rhs = &n_big * c.a(i + 1) - c.a(i);
            rep.check_eq(&lhs, &rhs, || format!("n={n} recurrence i={i}"));

            let q = {
                let (ai, ai1) = (c.a(i), c.a(i + 1));
                &ai * &ai + &ai1 * &ai1 - &n_big * &ai * &ai1
            };
            rep.check_eq(&q, &BigInt::one(), || format!("n={n} quadratic i={i}"));

            let det = {
                let (ai, ai1, ai2) = (c.a(i), c.a(i + 1), c.a(i + 2));
                &ai1 * &ai1 - &ai2 * &ai
            };
            rep.check_eq(&det, &BigInt::one(), || format!("n={n} determinant i={i}"));

            let shifted = {
                let (ai, ai1, ai2, ai3) = (c.a(i), c.a(i + 1), c.a(i + 2), c.a(i + 3));
                let s = &ai2 + &ai1;
                &s * &s - (&ai1 + &ai) * (&ai2 + &ai3)
            };
            rep.check_eq(&shifted, &(&n_big + 2), || {
                format!("n={n} shifted determinant i={i}")
            });
        }

        // A_i·A_{j+k} - A_j·A_{i+k} = A_{i-j}·A_k for i >= j, k >= 0.
        for j in 1..=upto {
            for i in j..=upto {
                for k in 0..=upto {
                    let lhs = c.a(i) * c.a(j + k) - c.a(j) * c.a(i + k);
                    let rhs = c.a(i - j) * c.a(k);
                    rep.check_eq(&lhs, &rhs, || format!("n={n} product i={i} j={j} k={k}"));
                }
            }
        }

        for r in (1..=upto).step_by(2) {
            let lhs = &n_big * c.s(r).expect("odd r");
            let rhs = c.a(r + 1);
            rep.check_eq(&lhs, &rhs, || format!("n={n} alternating sum r={r}"));
        }

        // B_{2s+2t} = B_{2s}·B_{2t+1} + B_{2s-1}·B_{2t}.
        for s in 1..=upto / 2 {
            for t in 1..=upto / 2 {
                let lhs = c.b(2 * s + 2 * t);
                let rhs = c.b(2 * s) * c.b(2 * t + 1) + c.b(2 * s - 1) * c.b(2 * t);
                rep.check_eq(&lhs, &rhs, || format!("n={n} B addition s={s} t={t}"));
            }
        }

        for i in 1..=upto {
            let lhs = c.b(2 * i - 1) + (&n_big - 2) * c.b(2 * i);
            let rhs = c.b(2 * i + 1);
            rep.check_eq(&lhs, &rhs, || format!("n={n} B odd step i={i}"));
        }

        // The odd-index instance B_7 vs B_3·B_5 + B_2·B_4: equality is the
        // Fibonacci coincidence at n = 3 and must fail for n >= 4.
        let odd_lhs = c.b(7);
        let odd_rhs = c.b(3) * c.b(5) + c.b(2) * c.b(4);
        if n == 3 {
            rep.check_eq(&odd_lhs, &odd_rhs, || "n=3 odd-index B instance".into());
        } else {
            rep.check(
                odd_lhs != odd_rhs,
                || format!("n={n} odd-index B instance"),
                "B_7 != B_3·B_5 + B_2·B_4",
                &format!("{odd_lhs} vs {odd_rhs}"),
            );
        }

        // Monotone with the single tie B_1 = B_2 at the start.
        rep.check(
            c.b(1) == c.b(2),
            || format!("n={n} B_1 vs B_2"),
            "equal",
            "different",
        );
        for i in 2..=2 * upto {
            let (lo, hi) = (c.b(i), c.b(i + 1));
            rep.check(
                lo < hi,
                || format!("n={n} B monotone i={i}"),
                &format!("B_{i} < B_{}", i + 1),
                &format!("{lo} >= {hi}"),
            );
        }

        // Equal-sum orbit lemma: if (c,d) = (a,b)·Φ^i has c+d = a+b, then
        // (a,b)·Φ and (c,d)·Φ⁻¹ also have equal sums.
        let mut instances = 0u64;
        for a in 1..=12i64 {
            for b in 1..=12i64 {
                let v = DimVector::from_i64(a, b);
                for i in 1..=6i64 {
                    let w = coxeter_apply(n, &v, i);
                    if w.length() != v.length() {
                        continue;
                    }
                    instances += 1;
                    let lhs = coxeter_apply(n, &v, 1).length();
                    let rhs = coxeter_apply(n, &w, -1).length();
                    rep.check_eq(&lhs, &rhs, || format!("n={n} equal-sum lemma v={v} i={i}"));
                }
            }
        }
        rep.check(
            instances > 0,
            || format!("n={n} equal-sum lemma instances"),
            ">= 1 instance in the grid",
            "none",
        );
    }
    rep.finish(start)
}

/// Ratio inequalities of the `A` sequence: monotone decay of consecutive
/// ratios, injectivity of `A_i/A_j`, impossibility of the three-term ratio
/// equation, and the orbit comparison inequality for imaginary roots.
pub fn inequalities_suite(n_lo: u32, n_hi: u32, upto: usize, tuple_bound: usize) -> Report {
    let start = std::time::Instant::now();
    let mut rep = Report::new("inequalities");
    for n in n_lo..=n_hi {
        let Ok(mut c) = SeqCache::new(n) else {
            rep.check(false, || format!("n={n}"), "n >= 3", "invalid");
            continue;
        };
        let n_big = BigInt::from(n);

        // n = A_2/A_1 > A_{t+1}/A_t > A_{r+1}/A_r > n-1 for 2 <= t < r.
        for t in 2..upto {
            for r in (t + 1)..=upto {
                let top = &n_big * c.a(t) - c.a(t + 1);
                rep.check(
                    top.is_positive(),
                    || format!("n={n} ratio below n at t={t}"),
                    "n·A_t > A_{t+1}",
                    &top.to_string(),
                );
                let mid = c.a(t + 1) * c.a(r) - c.a(r + 1) * c.a(t);
                rep.check(
                    mid.is_positive(),
                    || format!("n={n} ratio decay t={t} r={r}"),
                    "A_{t+1}/A_t > A_{r+1}/A_r",
                    &mid.to_string(),
                );
                let bot: BigInt = c.a(r + 1) - (&n_big - 1) * c.a(r);
                rep.check(
                    bot.is_positive(),
                    || format!("n={n} ratio above n-1 at r={r}"),
                    "A_{r+1} > (n-1)·A_r",
                    &bot.to_string(),
                );
            }
        }

        for r in 1..=upto {
            let one = c.a(r + 1) * c.a(r + 1) - c.a(r) * c.a(r + 2);
            rep.check_eq(&one, &BigInt::one(), || format!("n={n} gap r={r}"));
        }

        // A_{j+k}/A_j > A_{s+t}/A_s when k > t, or k = t and j < s; and
        // A_i/A_j = A_r/A_s only for (i,j) = (r,s).
        for j in 1..upto {
            for k in 1..=(upto - j) {
                for s in 1..upto {
                    for t in 1..=(upto - s) {
                        let i = j + k;
                        let r = s + t;
                        let lhs = c.a(i) * c.a(s);
                        let rhs = c.a(r) * c.a(j);
                        if k > t || (k == t && j < s) {
                            rep.check(
                                lhs > rhs,
                                || format!("n={n} ratio order j={j} k={k} s={s} t={t}"),
                                "strictly greater",
                                &format!("{lhs} vs {rhs}"),
                            );
                        }
                        rep.check(
                            (lhs == rhs) == (i == r && j == s),
                            || format!("n={n} ratio injectivity i={i} j={j} r={r} s={s}"),
                            "equality iff equal index pairs",
                            &format!("{lhs} vs {rhs}"),
                        );
                    }
                }
            }
        }

        // A_{i+j}/A_s != A_i/A_t + A_j/A_r for all small tuples.
        for i in 1..=tuple_bound {
            for j in 1..=tuple_bound {
                for r in 1..=tuple_bound {
                    for s in 1..=tuple_bound {
                        for t in 1..=tuple_bound {
                            let lhs = c.a(i + j) * c.a(t) * c.a(r);
                            let rhs = c.a(i) * c.a(s) * c.a(r) + c.a(j) * c.a(s) * c.a(t);
                            rep.check(
                                lhs != rhs,
                                || format!("n={n} three-term i={i} j={j} r={r} s={s} t={t}"),
                                "never equal",
                                "equal",
                            );
                        }
                    }
                }
            }
        }

        // Orbit comparison: for imaginary (a,b) and (c,d) = (a,b)·Φ⁻¹,
        // d/c > (nb-a)/b > b/a.
        for v in imaginary_vectors(n, 20, 20) {
            let w = coxeter_apply(n, &v, -1);
            let mid = &n_big * &v.b - &v.a;
            rep.check(
                w.is_positive(),
                || format!("n={n} orbit comparison positivity {v}"),
                "positive Φ⁻¹ image",
                &format!("{w}"),
            );
            let first = &w.b * &v.b - &mid * &w.a;
            rep.check(
                first.is_positive(),
                || format!("n={n} orbit comparison upper {v}"),
                "d/c > (nb-a)/b",
                &first.to_string(),
            );
            let second = &mid * &v.a - &v.b * &v.b;
            rep.check(
                second.is_positive(),
                || format!("n={n} orbit comparison lower {v}"),
                "(nb-a)/b > b/a",
                &second.to_string(),
            );
        }
    }
    rep.finish(start)
}

/// Constructs a verified brick for every imaginary root with component sum
/// up to the bound.
pub fn bricks_suite(n: u32, sum_bound: i64) -> Report {
    let start = std::time::Instant::now();
    let mut rep = Report::new("bricks");
    for root in imaginary_roots_by_sum(n, sum_bound) {
        match construct_brick(n, &root) {
            Ok(cert) => {
                rep.check(
                    cert.rep.dim == root && cert.end_dim == 1 && cert.verified,
                    || format!("n={n} root {root}"),
                    "dim match, end_dim 1",
                    &format!("dim {} end {}", cert.rep.dim, cert.end_dim),
                );
            }
            Err(e) => {
                rep.check(
                    false,
                    || format!("n={n} root {root}"),
                    "brick constructed",
                    &e.to_string(),
                );
            }
        }
    }
    rep.finish(start)
}

/// Runs a length census for every imaginary seed in the box and every
/// length up to the bound; the census itself errors if it ever finds more
/// than two nodes. Also checks that a census with exactly two hits occurs.
pub fn beta_suite(n: u32, seed_bound: i64, length_bound: i64) -> Report {
    let start = std::time::Instant::now();
    let mut rep = Report::new("beta");
    let mut max_count = 0usize;
    for v in imaginary_vectors(n, seed_bound, seed_bound) {
        let seed = ComponentSeed::new(n, v.clone()).expect("imaginary seed");
        for d in 1..=length_bound {
            match length_census(&seed, &BigInt::from(d)) {
                Ok(res) => {
                    max_count = max_count.max(res.count());
                    rep.check(
                        res.count() <= 2,
                        || format!("n={n} seed {v} d={d}"),
                        "<= 2",
                        &res.count().to_string(),
                    );
                }
                Err(e) => {
                    rep.check(
                        false,
                        || format!("n={n} seed {v} d={d}"),
                        "census completes",
                        &e.to_string(),
                    );
                }
            }
        }
    }
    rep.check(
        max_count == 2,
        || format!("n={n} maximal census count"),
        "2",
        &max_count.to_string(),
    );
    rep.finish(start)
}

/// Runs the same-length pair search for every pair of quasi-lengths in the
/// box and re-verifies each witness along an independent route: the layer
/// formulas `A_r·(a,b)` / `A_r·(b, nb-a)` instead of the orbit summation.
/// Every pair of quasi-lengths must produce at least one witness.
pub fn pairs_suite(n: u32, r_bound: u32, s_bound: u32, max_i: i64) -> Report {
    let start = std::time::Instant::now();
    let mut rep = Report::new("pairs");
    let Ok(mut cache) = SeqCache::new(n) else {
        rep.check(false, || format!("n={n}"), "n >= 3", "invalid");
        return rep.finish(start);
    };
    let n_big = BigInt::from(n);
    for r in 1..=r_bound {
        for s in 1..=s_bound {
            let witnesses = match samelength_pair_search(n, r, s, max_i) {
                Ok(w) => w,
                Err(e) => {
                    rep.check(
                        false,
                        || format!("n={n} r={r} s={s}"),
                        "search completes",
                        &e.to_string(),
                    );
                    continue;
                }
            };
            rep.check(
                !witnesses.is_empty(),
                || format!("n={n} r={r} s={s} max_i={max_i}"),
                ">= 1 witness",
                "none",
            );
            for w in &witnesses {
                let mut layer = |ql: u32, base: &DimVector| -> DimVector {
                    let a_ql = cache.a(ql as usize);
                    if ql % 2 == 1 {
                        base.scaled(&a_ql)
                    } else {
                        DimVector::new(&base.b * &a_ql, (&n_big * &base.b - &base.a) * &a_ql)
                    }
                };
                let expect_s = layer(s, &w.seed);
                let shifted = coxeter_apply(n, &w.seed, w.shift);
                let expect_r = layer(r, &shifted);
                rep.check(
                    w.node_s.dim == expect_s,
                    || format!("n={n} r={r} s={s} i={} seed {}", w.shift, w.seed),
                    &format!("{expect_s}"),
                    &format!("{}", w.node_s.dim),
                );
                rep.check(
                    w.node_r.dim == expect_r,
                    || format!("n={n} r={r} s={s} i={} seed {}", w.shift, w.seed),
                    &format!("{expect_r}"),
                    &format!("{}", w.node_r.dim),
                );
                rep.check(
                    w.node_r.dim.length() == w.length && w.node_s.dim.length() == w.length,
                    || format!("n={n} r={r} s={s} i={} seed {}", w.shift, w.seed),
                    "equal lengths",
                    "mismatch",
                );
                rep.check(
                    is_imaginary(n, &w.seed),
                    || format!("n={n} r={r} s={s} i={} seed {}", w.shift, w.seed),
                    "imaginary seed",
                    "not imaginary",
                );
            }
        }
    }
    rep.finish(start)
}

/// Dimension-set decisions cross-checked against a fixed-window orbit scan,
/// mesh additivity on a window, and the even-layer injectivity: equal layer
/// dimension vectors at the same even quasi-length force equal seeds.
pub fn dimset_suite(n: u32, seed_bound: i64, window: i64) -> Report {
    let start = std::time::Instant::now();
    let mut rep = Report::new("dimset");
    let seeds = imaginary_vectors(n, seed_bound, seed_bound);
    let scan_window = 16i64.max(2 * window);

    for x in &seeds {
        for y in &seeds {
            let by_orbit = (-scan_window..=scan_window).any(|k| &coxeter_apply(n, x, k) == y);
            let sx = ComponentSeed::new(n, x.clone()).expect("imaginary");
            let sy = ComponentSeed::new(n, y.clone()).expect("imaginary");
            match dimset_equal(&sx, &sy) {
                Ok(decided) => rep.check(
                    decided == by_orbit,
                    || format!("n={n} dimset {x} vs {y}"),
                    &by_orbit.to_string(),
                    &decided.to_string(),
                ),
                Err(e) => rep.check(
                    false,
                    || format!("n={n} dimset {x} vs {y}"),
                    "decision",
                    &e.to_string(),
                ),
            }
        }
    }

    // Shifted seeds always share the dimension set.
    for x in seeds.iter().take(8) {
        let sx = ComponentSeed::new(n, x.clone()).expect("imaginary");
        for k in 1..=3i64 {
            let shifted = ComponentSeed::new(n, coxeter_apply(n, x, k)).expect("orbit stays");
            let same = dimset_equal(&sx, &shifted).unwrap_or(false);
            rep.check(
                same,
                || format!("n={n} orbit shift {x} by {k}"),
                "true",
                "false",
            );
        }
    }

    // Mesh additivity on the window.
    for x in seeds.iter().take(6) {
        let sx = ComponentSeed::new(n, x.clone()).expect("imaginary");
        for i in -window..=window {
            for r in 1..=window.max(1) as u32 {
                let lhs =
                    &node_dim(&sx, NodeCoord::new(i, r)) + &node_dim(&sx, NodeCoord::new(i + 1, r));
                let rhs = &node_dim(&sx, NodeCoord::new(i, r + 1))
                    + &node_dim(&sx, NodeCoord::new(i + 1, r - 1));
                rep.check(
                    lhs == rhs,
                    || format!("n={n} mesh seed {x} i={i} r={r}"),
                    &format!("{rhs}"),
                    &format!("{lhs}"),
                );
            }
        }
    }

    // Even-layer injectivity: at one fixed even quasi-length the layer
    // vector A_r·(b, nb-a) determines the seed (the A_r factor cancels), so
    // equal layers force equal seeds and, in particular, equal dimension
    // sets.
    let n_big = BigInt::from(n);
    let layer = |v: &DimVector| DimVector::new(v.b.clone(), &n_big * &v.b - &v.a);
    for x in &seeds {
        for y in &seeds {
            let eq_layers = layer(x) == layer(y);
            rep.check(
                eq_layers == (x == y),
                || format!("n={n} even layer {x} vs {y}"),
                "equal layers iff equal seeds",
                &format!("{eq_layers}"),
            );
            if eq_layers {
                let sx = ComponentSeed::new(n, x.clone()).expect("imaginary");
                let sy = ComponentSeed::new(n, y.clone()).expect("imaginary");
                rep.check(
                    dimset_equal(&sx, &sy).unwrap_or(false),
                    || format!("n={n} even layer dimset {x} vs {y}"),
                    "true",
                    "false",
                );
            }
        }
    }

    // Quasi-length options stay consistent with the census machinery on a
    // few roots: r = 1 is always admissible.
    for x in seeds.iter().take(6) {
        match quasi_length_options(n, x) {
            Ok(opts) => rep.check(
                opts.first() == Some(&1),
                || format!("n={n} quasi-length options {x}"),
                "starts with 1",
                &format!("{opts:?}"),
            ),
            Err(e) => rep.check(
                false,
                || format!("n={n} quasi-length options {x}"),
                "computed",
                &e.to_string(),
            ),
        }
    }
    rep.finish(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_pass_small() {
        let r = identities_suite(3, 4, 10);
        assert!(
            r.ok(),
            "failures: {:?}",
            &r.failures[..r.failures.len().min(3)]
        );
        assert!(r.cases > 1000);
    }

    #[test]
    fn inequalities_pass_small() {
        let r = inequalities_suite(3, 4, 10, 5);
        assert!(
            r.ok(),
            "failures: {:?}",
            &r.failures[..r.failures.len().min(3)]
        );
    }

    #[test]
    fn bricks_suite_small() {
        let r = bricks_suite(3, 12);
        assert!(
            r.ok(),
            "failures: {:?}",
            &r.failures[..r.failures.len().min(3)]
        );
        assert!(r.cases > 10);
    }

    #[test]
    fn beta_suite_small() {
        let r = beta_suite(3, 4, 40);
        assert!(
            r.ok(),
            "failures: {:?}",
            &r.failures[..r.failures.len().min(3)]
        );
    }

    #[test]
    fn pairs_suite_small() {
        let r = pairs_suite(3, 2, 2, 8);
        assert!(
            r.ok(),
            "failures: {:?}",
            &r.failures[..r.failures.len().min(3)]
        );
    }

    #[test]
    fn dimset_suite_small() {
        let r = dimset_suite(3, 4, 3);
        assert!(
            r.ok(),
            "failures: {:?}",
            &r.failures[..r.failures.len().min(3)]
        );
    }

    #[test]
    fn report_serializes_without_wall_time() {
        let r = identities_suite(3, 3, 3);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"suite\""));
        assert!(!json.contains("wall_ms"));
    }
}
