//! Root calculus for `K_n` on the dimension-vector level.
//!
//! A dimension vector `(a, b)` records the dimension at the source vertex `2`
//! first and at the sink vertex `1` second; with this convention
//! `dim P_1 = (0,1)`, `dim P_2 = (1,n)` and `dim I_0 = (1,0)`. The Coxeter
//! matrix acts on row vectors from the right, so `dim τM = (dim M)·Φ` for
//! non-projective `M`.
//!
//! Ratio comparisons in this module and its callers are always done by
//! integer cross-multiplication; several of the inequalities in play are
//! sharp with differences of exactly 1, so floating point is never used.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::sequences::SeqCache;
use crate::{Error, Result};

/// A pair of integers: dimension at the source vertex `2`, then at the sink
/// vertex `1`. Module dimension vectors are componentwise nonnegative;
/// intermediate Coxeter-orbit values may have arbitrary signs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector {
    pub a: BigInt,
    pub b: BigInt,
}

impl DimVector {
    pub fn new(a: BigInt, b: BigInt) -> Self {
        DimVector { a, b }
    }

    pub fn from_i64(a: i64, b: i64) -> Self {
        DimVector {
            a: a.into(),
            b: b.into(),
        }
    }

    /// `a + b`, the length of a module with this dimension vector.
    pub fn length(&self) -> BigInt {
        &self.a + &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.a.is_negative() && !self.b.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.a.is_positive() && self.b.is_positive()
    }

    /// Componentwise scaling.
    pub fn scaled(&self, k: &BigInt) -> Self {
        DimVector {
            a: &self.a * k,
            b: &self.b * k,
        }
    }

    /// The vector with the two components exchanged.
    pub fn swapped(&self) -> Self {
        DimVector {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl fmt::Debug for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl std::ops::Add for &DimVector {
    type Output = DimVector;
    fn add(self, rhs: &DimVector) -> DimVector {
        DimVector {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

/// Classification of a nonzero, nonnegative vector by the quadratic form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum RootKind {
    Real,
    Imaginary,
    NonRoot,
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootKind::Real => write!(f, "Real"),
            RootKind::Imaginary => write!(f, "Imaginary"),
            RootKind::NonRoot => write!(f, "NonRoot"),
        }
    }
}

/// The root class of a vector together with its `q`-value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootClass {
    pub kind: RootKind,
    pub q: BigInt,
}

impl RootClass {
    fn from_q(q: BigInt) -> Self {
        let kind = if q.is_one() {
            RootKind::Real
        } else if q.is_negative() {
            RootKind::Imaginary
        } else {
            RootKind::NonRoot
        };
        RootClass { kind, q }
    }
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} q={}", self.kind, self.q)
    }
}

/// The quadratic form `q(a,b) = a² + b² - n·a·b`.
///
/// Total in `n`; the root-theoretic meaning assumes `n >= 3`, but the embed
/// checks evaluate it for smaller subquivers as well.
pub fn quadratic_form(n: u32, v: &DimVector) -> BigInt {
    &v.a * &v.a + &v.b * &v.b - BigInt::from(n) * &v.a * &v.b
}

/// The Euler form `⟨v,w⟩ = v.a·w.a + v.b·w.b - n·v.a·w.b`, which computes
/// `dim Hom(X,Y) - dim Ext¹(X,Y)` for modules with these dimension vectors.
pub fn euler_form(n: u32, v: &DimVector, w: &DimVector) -> BigInt {
    &v.a * &w.a + &v.b * &w.b - BigInt::from(n) * &v.a * &w.b
}

/// Classifies a nonzero, componentwise-nonnegative vector: real root if
/// `q = 1`, imaginary root if `q < 0`, non-root otherwise.
pub fn classify(n: u32, v: &DimVector) -> Result<RootClass> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "classification requires n >= 3, got {n}"
        )));
    }
    if v.is_zero() {
        return Err(Error::InvalidParameter(
            "cannot classify the zero vector".into(),
        ));
    }
    if !v.is_nonnegative() {
        return Err(Error::InvalidParameter(format!(
            "classification requires a nonnegative vector, got {v}"
        )));
    }
    Ok(RootClass::from_q(quadratic_form(n, v)))
}

/// `true` iff `v` is positive and `q(v) < 0`.
pub fn is_imaginary(n: u32, v: &DimVector) -> bool {
    v.is_nonnegative() && !v.is_zero() && quadratic_form(n, v).is_negative()
}

// Row action of the Coxeter matrix Φ = (n²-1, n; -n, -1):
// (a,b) Φ = ((n²-1)a - nb, na - b).
fn apply_phi(n: u32, v: &DimVector) -> DimVector {
    let n = BigInt::from(n);
    let nn1 = &n * &n - 1;
    DimVector {
        a: &nn1 * &v.a - &n * &v.b,
        b: &n * &v.a - &v.b,
    }
}

// (a,b) Φ⁻¹ = (-a + nb, -na + (n²-1)b).
fn apply_phi_inv(n: u32, v: &DimVector) -> DimVector {
    let n = BigInt::from(n);
    let nn1 = &n * &n - 1;
    DimVector {
        a: &n * &v.b - &v.a,
        b: &nn1 * &v.b - &n * &v.a,
    }
}

/// `v · Φ^power`, exact for any integer power (negative powers use `Φ⁻¹`).
pub fn coxeter_apply(n: u32, v: &DimVector, power: i64) -> DimVector {
    let mut cur = v.clone();
    if power >= 0 {
        for _ in 0..power {
            cur = apply_phi(n, &cur);
        }
    } else {
        for _ in 0..(-power) {
            cur = apply_phi_inv(n, &cur);
        }
    }
    cur
}

/// Iterator-style stepper along a Coxeter orbit; cheaper than recomputing
/// `coxeter_apply` from scratch at every shift.
#[derive(Debug, Clone)]
pub struct OrbitCursor {
    n: u32,
    pub shift: i64,
    pub vec: DimVector,
}

impl OrbitCursor {
    pub fn new(n: u32, v: DimVector) -> Self {
        OrbitCursor {
            n,
            shift: 0,
            vec: v,
        }
    }

    pub fn at(n: u32, v: &DimVector, shift: i64) -> Self {
        OrbitCursor {
            n,
            shift,
            vec: coxeter_apply(n, v, shift),
        }
    }

    pub fn step_up(&mut self) {
        self.vec = apply_phi(self.n, &self.vec);
        self.shift += 1;
    }

    pub fn step_down(&mut self) {
        self.vec = apply_phi_inv(self.n, &self.vec);
        self.shift -= 1;
    }
}

/// `dim τ^i X` by the closed form
/// `(A_{2i+1}·a - A_{2i}·b, A_{2i}·a - A_{2i-1}·b)`; agrees with
/// `coxeter_apply(n, v, i)`. For `i = 0` this is the identity.
pub fn tau_power_dim(n: u32, v: &DimVector, i: u32) -> Result<DimVector> {
    if i == 0 {
        return Ok(v.clone());
    }
    let mut cache = SeqCache::new(n)?;
    let i = i as usize;
    let hi = cache.a(2 * i + 1);
    let mid = cache.a(2 * i);
    let lo = cache.a(2 * i - 1);
    Ok(DimVector {
        a: &hi * &v.a - &mid * &v.b,
        b: &mid * &v.a - &lo * &v.b,
    })
}

/// `dim P_i = (A_{i-1}, A_i)` for `i >= 1`; always a real root.
pub fn preprojective_dim(n: u32, i: u32) -> Result<DimVector> {
    if i == 0 {
        return Err(Error::InvalidParameter(
            "preprojective index starts at 1".into(),
        ));
    }
    let mut cache = SeqCache::new(n)?;
    Ok(DimVector {
        a: cache.a(i as usize - 1),
        b: cache.a(i as usize),
    })
}

/// `dim I_j = (A_{j+1}, A_j)` for `j >= 0`; always a real root.
pub fn preinjective_dim(n: u32, j: u32) -> Result<DimVector> {
    let mut cache = SeqCache::new(n)?;
    Ok(DimVector {
        a: cache.a(j as usize + 1),
        b: cache.a(j as usize),
    })
}
