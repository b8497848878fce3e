//! Regular Auslander-Reiten components on the dimension-vector level.
//!
//! A regular component is a `ℤA_∞` grid. Fixing a quasi-simple `X` on its
//! bottom row, the node at coordinate `(i, r)` is the indecomposable with
//! quasi-top `τ^i X` and quasi-length `r`; its dimension vector is the sum
//! of `r` consecutive Coxeter-orbit values starting at shift `i`.
//!
//! Termination of every scan in this module rests on the same fact: along a
//! Coxeter orbit of an imaginary root the lengths `|τ^i X|` form a strictly
//! convex, eventually increasing sequence in both directions (the dominant
//! eigenvalue of `Φ` exceeds 1 and integer vectors are never
//! eigenvector-aligned). The scans walk past the minimum until the target is
//! exceeded, with a hard safety cap that fails loudly rather than looping.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::roots::{coxeter_apply, is_imaginary, quadratic_form, DimVector, OrbitCursor};
use crate::sequences::SeqCache;
use crate::{Error, Result};

/// A regular component, named by the dimension vector of a quasi-simple
/// module on its bottom row. Such a module exists for every imaginary root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSeed {
    n: u32,
    qs_dim: DimVector,
}

impl ComponentSeed {
    pub fn new(n: u32, qs_dim: DimVector) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "component seeds need n >= 3, got {n}"
            )));
        }
        if !is_imaginary(n, &qs_dim) {
            let q = quadratic_form(n, &qs_dim);
            return Err(Error::NotImaginaryRoot {
                n,
                a: qs_dim.a,
                b: qs_dim.b,
                q,
            });
        }
        Ok(ComponentSeed { n, qs_dim })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn qs_dim(&self) -> &DimVector {
        &self.qs_dim
    }
}

/// Grid coordinate: τ-shift `i` of the quasi-top and quasi-length `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct NodeCoord {
    pub shift: i64,
    pub quasi_length: u32,
}

impl NodeCoord {
    pub fn new(shift: i64, quasi_length: u32) -> Self {
        NodeCoord {
            shift,
            quasi_length,
        }
    }
}

/// One census hit: a node and its dimension vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusHit {
    pub coord: NodeCoord,
    pub dim: DimVector,
}

/// All nodes of one component with a given length. At most two exist.
#[derive(Debug, Clone)]
pub struct CensusResult {
    pub length: BigInt,
    pub hits: Vec<CensusHit>,
}

impl CensusResult {
    pub fn count(&self) -> usize {
        self.hits.len()
    }
}

/// Dimension vector of the node `(i, r)`: the exact sum
/// `Σ_{l=0}^{r-1} dim τ^{i+l} X`. Quasi-length 0 gives the zero vector
/// (the empty sum), which the mesh relations use.
pub fn node_dim(seed: &ComponentSeed, coord: NodeCoord) -> DimVector {
    let mut cur = OrbitCursor::at(seed.n, &seed.qs_dim, coord.shift);
    let mut acc = DimVector::new(BigInt::zero(), BigInt::zero());
    for _ in 0..coord.quasi_length {
        acc = &acc + &cur.vec;
        cur.step_up();
    }
    acc
}

const SCAN_CAP: usize = 100_000;

/// The orbit element of minimal length, with ties (two adjacent equal
/// minima can occur, never three) broken towards the lexicographically
/// smaller vector. Returns its shift and dimension vector.
pub fn min_orbit_length(n: u32, v: &DimVector) -> Result<(i64, DimVector)> {
    if !is_imaginary(n, v) {
        let q = quadratic_form(n, v);
        return Err(Error::NotImaginaryRoot {
            n,
            a: v.a.clone(),
            b: v.b.clone(),
            q,
        });
    }
    let walk = |dir: i64| -> Result<(i64, DimVector)> {
        // Walks from shift 0 in direction `dir` while lengths strictly
        // decrease; returns the last point before they stop decreasing.
        let mut cur = OrbitCursor::new(n, v.clone());
        let mut best = (0i64, v.clone());
        for _ in 0..SCAN_CAP {
            let mut next = cur.clone();
            if dir > 0 {
                next.step_up();
            } else {
                next.step_down();
            }
            if next.vec.length() < best.1.length() {
                best = (next.shift, next.vec.clone());
                cur = next;
            } else {
                if next.vec.length() == best.1.length() && next.vec < best.1 {
                    best = (next.shift, next.vec.clone());
                }
                return Ok(best);
            }
        }
        Err(Error::TheoremViolation(format!(
            "orbit of {v} kept decreasing for {SCAN_CAP} steps"
        )))
    };
    let up = walk(1)?;
    let down = walk(-1)?;
    let up_len = up.1.length();
    let down_len = down.1.length();
    Ok(if up_len < down_len {
        up
    } else if down_len < up_len {
        down
    } else if up.1 <= down.1 {
        up
    } else {
        down
    })
}

/// Finds every node of the component with `|node| = d` and asserts the count
/// is at most two. The window is sound: quasi-lengths are bounded by
/// `d / min|τ^i X|`, and for each quasi-length the shift scan runs outward
/// until lengths exceed `d` after passing their minimum.
///
/// ```
/// use num_bigint::BigInt;
/// use wildkron::components::{length_census, ComponentSeed};
/// use wildkron::roots::DimVector;
///
/// let seed = ComponentSeed::new(3, DimVector::from_i64(8, 7)).unwrap();
/// let census = length_census(&seed, &BigInt::from(60)).unwrap();
/// assert_eq!(census.count(), 2);
/// ```
pub fn length_census(seed: &ComponentSeed, d: &BigInt) -> Result<CensusResult> {
    if !d.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "census length must be >= 1, got {d}"
        )));
    }
    let (min_shift, min_vec) = min_orbit_length(seed.n, &seed.qs_dim)?;
    let m0 = min_vec.length();
    let r_max_big: BigInt = d / &m0;
    let r_max = u64::try_from(&r_max_big).unwrap_or(u64::MAX);
    if r_max > SCAN_CAP as u64 {
        return Err(Error::InvalidParameter(format!(
            "census length {d} admits quasi-lengths up to {r_max}; scan refused"
        )));
    }
    let mut hits = Vec::new();
    for r in 1..=r_max {
        let r = r as u32;
        scan_quasi_length(seed, r, min_shift, d, &mut hits)?;
    }
    hits.sort_by_key(|h: &CensusHit| (h.coord.quasi_length, h.coord.shift));
    if hits.len() > 2 {
        return Err(Error::TheoremViolation(format!(
            "census found {} nodes of length {d} in the component of {} (expected at most 2): {hits:?}",
            hits.len(),
            seed.qs_dim
        )));
    }
    Ok(CensusResult {
        length: d.clone(),
        hits,
    })
}

// Scans all shifts for one quasi-length, both directions from `start`,
// maintaining the window sum incrementally.
fn scan_quasi_length(
    seed: &ComponentSeed,
    r: u32,
    start: i64,
    d: &BigInt,
    hits: &mut Vec<CensusHit>,
) -> Result<()> {
    let base = node_dim(seed, NodeCoord::new(start, r));
    let record = |i: i64, sum: &DimVector, hits: &mut Vec<CensusHit>| {
        if &sum.length() == d {
            hits.push(CensusHit {
                coord: NodeCoord::new(i, r),
                dim: sum.clone(),
            });
        }
    };
    record(start, &base, hits);

    // Upward: window [i, i+r), cursors at both edges.
    let mut lo = OrbitCursor::at(seed.n, &seed.qs_dim, start);
    let mut hi = OrbitCursor::at(seed.n, &seed.qs_dim, start + i64::from(r));
    let mut sum = base.clone();
    let mut prev = sum.length();
    let mut steps = 0usize;
    loop {
        let next = DimVector::new(
            &sum.a + &hi.vec.a - &lo.vec.a,
            &sum.b + &hi.vec.b - &lo.vec.b,
        );
        hi.step_up();
        lo.step_up();
        sum = next;
        let len = sum.length();
        record(lo.shift, &sum, hits);
        if &len > d && len > prev {
            break;
        }
        prev = len;
        steps += 1;
        if steps > SCAN_CAP {
            return Err(Error::TheoremViolation(format!(
                "census scan did not terminate upward at quasi-length {r}"
            )));
        }
    }

    // Downward, symmetrically.
    let mut lo = OrbitCursor::at(seed.n, &seed.qs_dim, start);
    let mut hi = OrbitCursor::at(seed.n, &seed.qs_dim, start + i64::from(r));
    let mut sum = base;
    let mut prev = sum.length();
    let mut steps = 0usize;
    loop {
        lo.step_down();
        hi.step_down();
        let next = DimVector::new(
            &sum.a + &lo.vec.a - &hi.vec.a,
            &sum.b + &lo.vec.b - &hi.vec.b,
        );
        sum = next;
        let len = sum.length();
        record(lo.shift, &sum, hits);
        if &len > d && len > prev {
            break;
        }
        prev = len;
        steps += 1;
        if steps > SCAN_CAP {
            return Err(Error::TheoremViolation(format!(
                "census scan did not terminate downward at quasi-length {r}"
            )));
        }
    }
    Ok(())
}

/// A verified same-length pair: `node_r` has quasi-length `r` on the τ-shift
/// `i` of the seed, `node_s` has quasi-length `s` on the seed itself, and
/// both have the stated length.
#[derive(Debug, Clone)]
pub struct SameLengthWitness {
    pub shift: i64,
    pub seed: DimVector,
    pub node_r: CensusHit,
    pub node_s: CensusHit,
    pub length: BigInt,
}

// Strips the full common divisor, which in particular removes every common
// divisor A_t. The ratio is what the length equation determines, and the
// primitive representative is the canonical quasi-simple choice.
fn primitive(v: DimVector) -> DimVector {
    let g = v.a.gcd(&v.b);
    if g.is_zero() || g.is_one() {
        v
    } else {
        DimVector::new(v.a / &g, v.b / g)
    }
}

/// Searches for components carrying same-length pairs with quasi-lengths
/// `r` and `s`: for each `i <= max_i` the candidate seed `(c,d)` solving the
/// length-ratio equation of the matching parity case is built, stripped to
/// its primitive form, and re-verified from scratch (imaginary root, both
/// node dimensions recomputed, lengths equal). Only verified witnesses are
/// returned; an empty result is not an error.
pub fn samelength_pair_search(
    n: u32,
    r: u32,
    s: u32,
    max_i: i64,
) -> Result<Vec<SameLengthWitness>> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidParameter("quasi-lengths must be >= 1".into()));
    }
    let mut cache = SeqCache::new(n)?;
    let a_r = cache.a(r as usize);
    let a_s = cache.a(s as usize);
    let n_big = BigInt::from(n);
    let mut witnesses = Vec::new();
    for i in 1..=max_i.max(0) {
        let iu = i as usize;
        let hi = cache.a(2 * iu + 1);
        let mid = cache.a(2 * iu);
        let lo = cache.a(2 * iu - 1);
        let lo2 = cache.a(2 * iu - 2);
        let (c0, d0) = match (r % 2 == 1, s % 2 == 1) {
            (true, true) => (&a_r * (&mid + &lo) + &a_s, &a_r * (&hi + &mid) - &a_s),
            (true, false) => (
                &a_r * (&mid + &lo) + (&n_big + 1) * &a_s,
                &a_r * (&hi + &mid) + &a_s,
            ),
            (false, true) => (&a_s + &a_r * (&lo + &lo2), &a_r * (&mid + &lo) - &a_s),
            (false, false) => (
                &a_r * (&lo + &lo2) + (&n_big + 1) * &a_s,
                &a_r * (&mid + &lo) + &a_s,
            ),
        };
        if !c0.is_positive() || !d0.is_positive() {
            continue;
        }
        let candidate = primitive(DimVector::new(c0, d0));
        if !is_imaginary(n, &candidate) {
            continue;
        }
        let seed = ComponentSeed::new(n, candidate.clone())?;
        let coord_r = NodeCoord::new(i - i64::from(r / 2), r);
        let coord_s = NodeCoord::new(-i64::from(s / 2), s);
        let dim_r = node_dim(&seed, coord_r);
        let dim_s = node_dim(&seed, coord_s);
        if dim_r.length() != dim_s.length() {
            continue;
        }
        let length = dim_r.length();
        witnesses.push(SameLengthWitness {
            shift: i,
            seed: candidate,
            node_r: CensusHit {
                coord: coord_r,
                dim: dim_r,
            },
            node_s: CensusHit {
                coord: coord_s,
                dim: dim_s,
            },
            length,
        });
    }
    Ok(witnesses)
}

/// Looks for a τ-shift of the seed whose dimension vector has one of the
/// symmetric shapes `(m,m)`, `(m,(n-1)m)` or `((n-1)m,m)` (the latter two
/// are τ-adjacent, so both orientations count). Scans shifts in the order
/// `0, 1, -1, 2, -2, …` up to `window`.
pub fn find_symmetric_quasisimple(seed: &ComponentSeed, window: i64) -> Option<(i64, DimVector)> {
    let n1 = BigInt::from(seed.n - 1);
    let symmetric =
        |v: &DimVector| -> bool { v.a == v.b || v.b == &n1 * &v.a || v.a == &n1 * &v.b };
    let mut order = vec![0i64];
    for k in 1..=window.max(0) {
        order.push(k);
        order.push(-k);
    }
    for i in order {
        let v = coxeter_apply(seed.n, &seed.qs_dim, i);
        if symmetric(&v) {
            return Some((i, v));
        }
    }
    None
}

/// A pair of distinct nodes of equal quasi-length and equal length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SameOrbitPair {
    pub first: NodeCoord,
    pub second: NodeCoord,
    pub length: BigInt,
}

/// Exhaustively lists pairs of distinct nodes in one τ-orbit (equal
/// quasi-length) with equal lengths, within the given windows.
pub fn same_orbit_samelength(
    seed: &ComponentSeed,
    max_shift: i64,
    max_ql: u32,
) -> Vec<SameOrbitPair> {
    let mut out = Vec::new();
    for r in 1..=max_ql {
        let entries: Vec<(i64, BigInt)> = (-max_shift..=max_shift)
            .map(|i| (i, node_dim(seed, NodeCoord::new(i, r)).length()))
            .collect();
        for x in 0..entries.len() {
            for y in x + 1..entries.len() {
                if entries[x].1 == entries[y].1 {
                    out.push(SameOrbitPair {
                        first: NodeCoord::new(entries[x].0, r),
                        second: NodeCoord::new(entries[y].0, r),
                        length: entries[x].1.clone(),
                    });
                }
            }
        }
    }
    out
}

/// The quasi-top `b·(B_{2r-1}, B_{2r+1})` whose node of quasi-length `r+1`
/// has the symmetric dimension vector `(m,m)`, together with `m = b·A_{r+1}`.
pub fn symmetric_layer_dim(n: u32, r: u32, b: u64) -> Result<(DimVector, BigInt)> {
    if r == 0 || b == 0 {
        return Err(Error::InvalidParameter(
            "symmetric layer needs r >= 1 and b >= 1".into(),
        ));
    }
    let mut cache = SeqCache::new(n)?;
    let b = BigInt::from(b);
    let top = DimVector::new(
        &b * cache.b(2 * r as usize - 1),
        &b * cache.b(2 * r as usize + 1),
    );
    let m = &b * cache.a(r as usize + 1);
    Ok((top, m))
}

/// Decides whether two components have the same set of dimension vectors,
/// i.e. whether the seeds lie on one Coxeter orbit. Both orbits are reduced
/// to their canonical minimal element, which terminates because orbit
/// lengths diverge in both directions.
pub fn dimset_equal(seed_c: &ComponentSeed, seed_d: &ComponentSeed) -> Result<bool> {
    if seed_c.n != seed_d.n {
        return Err(Error::InvalidParameter(format!(
            "components live over different quivers: n={} vs n={}",
            seed_c.n, seed_d.n
        )));
    }
    let (_, min_c) = min_orbit_length(seed_c.n, &seed_c.qs_dim)?;
    let (_, min_d) = min_orbit_length(seed_d.n, &seed_d.qs_dim)?;
    Ok(min_c == min_d)
}
