//! Representations of `K_n` and their exact homomorphism algebra.
//!
//! A representation assigns `k^a` to the source vertex and `k^b` to the sink,
//! with one `a×b` matrix per arrow acting on row vectors (`x ↦ x·M_i`). A
//! homomorphism `(g, h) : M → N` is a pair of matrices (`g : a×a'` on the
//! source side, `h : b×b'` on the sink side) with `M_i·h = g·N_i` for every
//! arrow; the dimension of the homomorphism space is the nullity of that
//! linear system, computed exactly.
//!
//! The ground field is the rationals. The systems solved here have integer
//! coefficients and nullity is invariant under extension of a
//! characteristic-0 field, so an endomorphism space of dimension 1 over `ℚ`
//! certifies the brick property over any algebraically closed field of
//! characteristic 0.
//!
//! `coxeter_plus` and `coxeter_minus` realize the Auslander-Reiten translates
//! `τ` and `τ⁻¹` as compositions of two reflection functors. Each reflection
//! swaps the roles of the two vertices, so applying `reflect_at_sink` twice
//! returns matrices in the original source→sink orientation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{sparse_rank, ExactMatrix};
use crate::roots::{coxeter_apply, quadratic_form, DimVector};
use crate::{Error, Result};

/// A representation of `K_n`: `n` matrices of shape `a×b`.
///
/// `n >= 1` is allowed (not just `n >= 3`) so that representations of a
/// subquiver `K_{n-1}` can be embedded into `K_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    pub n: u32,
    pub dim: DimVector,
    pub mats: Vec<ExactMatrix>,
}

impl Rep {
    /// Builds a representation from its arrow matrices, which must all share
    /// the same shape; the dimension vector is read off from it.
    pub fn new(n: u32, mats: Vec<ExactMatrix>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("arrow count must be >= 1".into()));
        }
        if mats.len() != n as usize {
            return Err(Error::InvalidRep(format!(
                "expected {n} matrices, got {}",
                mats.len()
            )));
        }
        let (a, b) = (mats[0].rows(), mats[0].cols());
        if mats.iter().any(|m| m.rows() != a || m.cols() != b) {
            return Err(Error::InvalidRep("arrow matrices differ in shape".into()));
        }
        Ok(Rep {
            n,
            dim: DimVector::new(a.into(), b.into()),
            mats,
        })
    }

    /// Convenience constructor from integer entries. `a` and `b` make the
    /// shape explicit so zero-dimensional spaces keep their shape.
    pub fn from_int_mats(n: u32, a: usize, b: usize, mats: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        let mut exact = Vec::with_capacity(mats.len());
        for m in mats {
            if m.len() != a || m.iter().any(|r| r.len() != b) {
                return Err(Error::InvalidRep(format!("matrix is not {a}x{b}")));
            }
            let mat = if a == 0 || b == 0 {
                ExactMatrix::zero(a, b)
            } else {
                ExactMatrix::from_int_rows(&m)?
            };
            exact.push(mat);
        }
        Rep::new(n, exact)
    }

    /// Source dimension as a machine integer.
    pub fn a(&self) -> usize {
        self.mats[0].rows()
    }

    /// Sink dimension as a machine integer.
    pub fn b(&self) -> usize {
        self.mats[0].cols()
    }
}

/// A solved homomorphism space.
#[derive(Debug, Clone)]
pub struct HomSolution {
    pub dimension: usize,
    /// Basis pairs `(g, h)`, present only when requested via [`hom_basis`].
    pub basis: Option<Vec<(ExactMatrix, ExactMatrix)>>,
}

// Sparse rows of the intertwining system {M_i·h - g·N_i = 0}. Variables are
// ordered g (row-major a×a') then h (row-major b×b'); each equation row is
// scaled to integer entries.
fn hom_system_rows(m: &Rep, n: &Rep) -> (Vec<Vec<(u32, BigInt)>>, usize) {
    let (a, b) = (m.a(), m.b());
    let (a2, b2) = (n.a(), n.b());
    let g_vars = a * a2;
    let total = g_vars + b * b2;
    let mut rows = Vec::new();
    for arrow in 0..m.n as usize {
        let mm = &m.mats[arrow];
        let nn = &n.mats[arrow];
        for u in 0..a {
            for v in 0..b2 {
                let mut ent: Vec<(u32, BigRational)> = Vec::new();
                for k2 in 0..a2 {
                    let c = nn.get(k2, v);
                    if !c.is_zero() {
                        ent.push(((u * a2 + k2) as u32, -c.clone()));
                    }
                }
                for k in 0..b {
                    let c = mm.get(u, k);
                    if !c.is_zero() {
                        ent.push(((g_vars + k * b2 + v) as u32, c.clone()));
                    }
                }
                if ent.is_empty() {
                    continue;
                }
                let mut lcm = BigInt::from(1);
                for (_, c) in &ent {
                    lcm = lcm.lcm(c.denom());
                }
                let mut row: Vec<(u32, BigInt)> = ent
                    .into_iter()
                    .map(|(ix, c)| (ix, c.numer() * &lcm / c.denom()))
                    .collect();
                row.sort_by_key(|e| e.0);
                rows.push(row);
            }
        }
    }
    (rows, total)
}

/// `dim Hom(M, N)`, exact, by sparse elimination of the intertwining system.
pub fn hom_dim(m: &Rep, n: &Rep) -> Result<HomSolution> {
    if m.n != n.n {
        return Err(Error::ArrowCountMismatch {
            left: m.n,
            right: n.n,
        });
    }
    let (rows, total) = hom_system_rows(m, n);
    let rank = sparse_rank(rows, total);
    Ok(HomSolution {
        dimension: total - rank,
        basis: None,
    })
}

/// Like [`hom_dim`] but also returns an explicit basis of `Hom(M, N)`.
/// Builds the dense system, so use it on small representations.
pub fn hom_basis(m: &Rep, n: &Rep) -> Result<HomSolution> {
    if m.n != n.n {
        return Err(Error::ArrowCountMismatch {
            left: m.n,
            right: n.n,
        });
    }
    let (a, b) = (m.a(), m.b());
    let (a2, b2) = (n.a(), n.b());
    let g_vars = a * a2;
    let total = g_vars + b * b2;
    let (rows, _) = hom_system_rows(m, n);
    let mut sys = ExactMatrix::zero(rows.len(), total);
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row {
            sys.set(r, *c as usize, BigRational::from_integer(v.clone()));
        }
    }
    let kernel = sys.right_kernel_basis();
    let mut basis = Vec::with_capacity(kernel.rows());
    for k in 0..kernel.rows() {
        let mut g = ExactMatrix::zero(a, a2);
        let mut h = ExactMatrix::zero(b, b2);
        for u in 0..a {
            for v in 0..a2 {
                g.set(u, v, kernel.get(k, u * a2 + v).clone());
            }
        }
        for u in 0..b {
            for v in 0..b2 {
                h.set(u, v, kernel.get(k, g_vars + u * b2 + v).clone());
            }
        }
        basis.push((g, h));
    }
    Ok(HomSolution {
        dimension: kernel.rows(),
        basis: Some(basis),
    })
}

/// `dim End(M)`.
pub fn end_dim(m: &Rep) -> usize {
    hom_dim(m, m).expect("arrow counts agree").dimension
}

/// A brick has endomorphism ring of dimension exactly 1.
pub fn is_brick(m: &Rep) -> bool {
    end_dim(m) == 1
}

/// The dual representation: dimension components swapped, every matrix
/// transposed. An involution; `hom_dim(dual(N), dual(M)) = hom_dim(M, N)`.
pub fn dual(m: &Rep) -> Rep {
    Rep {
        n: m.n,
        dim: m.dim.swapped(),
        mats: m.mats.iter().map(|mat| mat.transpose()).collect(),
    }
}

/// The row shift `F`: drops the last row and inserts a zero row on top.
/// Shape is preserved.
pub fn row_shift_f(m: &ExactMatrix) -> Result<ExactMatrix> {
    if m.rows() == 0 {
        return Err(Error::InvalidParameter(
            "row shift needs at least one row".into(),
        ));
    }
    let mut out = ExactMatrix::zero(m.rows(), m.cols());
    for r in 1..m.rows() {
        for c in 0..m.cols() {
            out.set(r, c, m.get(r - 1, c).clone());
        }
    }
    Ok(out)
}

/// Reflection functor at the sink. The sink space is replaced by the kernel
/// of the combined map `(x_1,…,x_n) ↦ Σ x_i·M_i` from `n` copies of the
/// source space; the new arrow matrices are the block projections of a
/// deterministic kernel basis. The result is a representation of the
/// reversed quiver, stored with its source/sink roles swapped, so applying
/// this twice yields `τ` in the original orientation.
pub fn reflect_at_sink(m: &Rep) -> Rep {
    let a = m.a();
    let refs: Vec<&ExactMatrix> = m.mats.iter().collect();
    let stacked = ExactMatrix::vstack(&refs);
    let kernel = stacked.left_kernel_basis(); // k × (n·a)
    let k = kernel.rows();
    let mats: Vec<ExactMatrix> = (0..m.n as usize)
        .map(|i| kernel.col_block(i * a, (i + 1) * a))
        .collect();
    Rep {
        n: m.n,
        dim: DimVector::new(k.into(), a.into()),
        mats,
    }
}

/// Reflection functor at the source, dually via the cokernel of
/// `x ↦ (x·M_1 | … | x·M_n)`.
pub fn reflect_at_source(m: &Rep) -> Rep {
    let b = m.b();
    let refs: Vec<&ExactMatrix> = m.mats.iter().collect();
    let wide = ExactMatrix::hstack(&refs); // a × (n·b)
    let coker = wide.right_kernel_basis().transpose(); // (n·b) × c
    let c = coker.cols();
    let mats: Vec<ExactMatrix> = (0..m.n as usize)
        .map(|i| coker.row_block(i * b, (i + 1) * b))
        .collect();
    Rep {
        n: m.n,
        dim: DimVector::new(b.into(), c.into()),
        mats,
    }
}

/// `τ` on representations: the two sink reflections composed. Errors if the
/// dimension vector does not transform by the Coxeter matrix, which signals
/// a projective direct summand.
pub fn coxeter_plus(m: &Rep) -> Result<Rep> {
    let expected = coxeter_apply(m.n, &m.dim, 1);
    let first = reflect_at_sink(m);
    let out = reflect_at_sink(&first);
    if out.dim != expected {
        return Err(Error::ReflectionContract(format!(
            "dim τM = {} but dim M·Φ = {} (projective summand in M = {})",
            out.dim, expected, m.dim
        )));
    }
    Ok(out)
}

/// `τ⁻¹` on representations: the two source reflections composed. Errors if
/// the dimension vector does not transform by `Φ⁻¹` (injective summand).
pub fn coxeter_minus(m: &Rep) -> Result<Rep> {
    let expected = coxeter_apply(m.n, &m.dim, -1);
    let first = reflect_at_source(m);
    let out = reflect_at_source(&first);
    if out.dim != expected {
        return Err(Error::ReflectionContract(format!(
            "dim τ⁻¹M = {} but dim M·Φ⁻¹ = {} (injective summand in M = {})",
            out.dim, expected, m.dim
        )));
    }
    Ok(out)
}

/// Embeds a `K_{n-1}`-representation into `K_n` by inserting a zero matrix
/// at arrow position `slot` (0-based).
///
/// When the dimension vector is an imaginary root of the subquiver, the
/// embedding facts are checked on the nose: it stays imaginary for the
/// bigger quiver, and its image under the bigger Coxeter matrix is not a
/// root of the subquiver at all.
pub fn embed(m: &Rep, slot: usize) -> Result<Rep> {
    let n_big = m.n + 1;
    if slot > m.n as usize {
        return Err(Error::InvalidParameter(format!(
            "slot {slot} out of range for {n_big} arrows"
        )));
    }
    let mut mats = m.mats.clone();
    mats.insert(slot, ExactMatrix::zero(m.a(), m.b()));
    let out = Rep {
        n: n_big,
        dim: m.dim.clone(),
        mats,
    };
    if quadratic_form(m.n, &m.dim).is_negative() {
        if !quadratic_form(n_big, &m.dim).is_negative() {
            return Err(Error::TheoremViolation(format!(
                "imaginary root {} of K_{} stopped being imaginary for K_{}",
                m.dim, m.n, n_big
            )));
        }
        let shifted = coxeter_apply(n_big, &m.dim, 1);
        let q_small = quadratic_form(m.n, &shifted);
        if q_small == BigInt::from(1) || q_small.is_negative() {
            return Err(Error::TheoremViolation(format!(
                "{}·Φ_{} = {} is still a root of K_{} (q = {})",
                m.dim, n_big, shifted, m.n, q_small
            )));
        }
    }
    Ok(out)
}

// --- JSON wire format -----------------------------------------------------
//
// {"n": int, "dim": [a, b], "mats": [[["entry", ...], ...], ...]}
//
// Entries are exact decimal strings; a non-integral rational entry is
// written as "p/q". All constructed bricks have integer entries.

#[derive(Serialize, Deserialize)]
struct RepWire {
    n: u32,
    dim: [u64; 2],
    mats: Vec<Vec<Vec<String>>>,
}

/// Serializes a representation to the JSON wire format.
pub fn rep_to_json(m: &Rep) -> Result<String> {
    let a = u64::try_from(&m.dim.a)
        .map_err(|_| Error::InvalidRep("dimension too large for wire format".into()))?;
    let b = u64::try_from(&m.dim.b)
        .map_err(|_| Error::InvalidRep("dimension too large for wire format".into()))?;
    let mats = m
        .mats
        .iter()
        .map(|mat| {
            (0..mat.rows())
                .map(|r| (0..mat.cols()).map(|c| mat.get(r, c).to_string()).collect())
                .collect()
        })
        .collect();
    let wire = RepWire {
        n: m.n,
        dim: [a, b],
        mats,
    };
    serde_json::to_string_pretty(&wire).map_err(|e| Error::InvalidRep(e.to_string()))
}

/// Parses the JSON wire format back into a representation.
pub fn rep_from_json(text: &str) -> Result<Rep> {
    let wire: RepWire =
        serde_json::from_str(text).map_err(|e| Error::InvalidRep(format!("bad JSON: {e}")))?;
    if wire.n == 0 {
        return Err(Error::InvalidRep("arrow count must be >= 1".into()));
    }
    let (a, b) = (wire.dim[0] as usize, wire.dim[1] as usize);
    if wire.mats.len() != wire.n as usize {
        return Err(Error::InvalidRep(format!(
            "expected {} matrices, got {}",
            wire.n,
            wire.mats.len()
        )));
    }
    let mut mats = Vec::with_capacity(wire.mats.len());
    for m in &wire.mats {
        if m.len() != a || m.iter().any(|row| row.len() != b) {
            return Err(Error::InvalidRep(format!("matrix is not {a}x{b}")));
        }
        let mut mat = ExactMatrix::zero(a, b);
        for (r, row) in m.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                let v: BigRational = entry
                    .parse()
                    .map_err(|_| Error::InvalidRep(format!("bad entry {entry:?}")))?;
                mat.set(r, c, v);
            }
        }
        mats.push(mat);
    }
    Rep::new(wire.n, mats)
}
