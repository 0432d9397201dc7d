//! Ring presentations: named variables plus a block monomial ordering.
//!
//! A ring is a list of variables split into consecutive blocks, each block
//! carrying a local or global degree-reverse-lexicographic ordering. Blocks
//! are compared left to right, so an initial global block has elimination
//! priority over the blocks behind it. A ring whose blocks are all local
//! presents the ring of germs at the origin.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockOrder {
    /// Negative degree reverse lexicographic: 1 is larger than every variable.
    LocalDegRevLex,
    /// Degree reverse lexicographic: every variable is larger than 1.
    GlobalDegRevLex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub start: usize,
    pub len: usize,
    pub order: BlockOrder,
}

#[derive(Debug, PartialEq, Eq)]
struct RingCtx {
    vars: Vec<String>,
    blocks: Vec<Block>,
}

/// Shared, immutable ring presentation. Cloning is cheap.
#[derive(Clone)]
pub struct Ring(Arc<RingCtx>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for b in &self.0.blocks {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            let kind = match b.order {
                BlockOrder::LocalDegRevLex => "local",
                BlockOrder::GlobalDegRevLex => "global",
            };
            write!(f, "{}(", kind)?;
            for (i, v) in self.0.vars[b.start..b.start + b.len].iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", v)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl Ring {
    /// Build a ring from variable names and a block specification. Each block
    /// names a consecutive run of the variables; together they must cover
    /// every variable exactly once.
    pub fn new(vars: &[&str], blocks: &[(&[&str], BlockOrder)]) -> Result<Ring> {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        for (i, v) in names.iter().enumerate() {
            if names[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        if blocks.is_empty() || blocks.iter().any(|(b, _)| b.is_empty()) {
            return Err(Error::BadBlocks("empty block".into()));
        }
        let mut built = Vec::new();
        let mut pos = 0usize;
        for (bvars, order) in blocks {
            let start = pos;
            for bv in *bvars {
                if pos >= names.len() || names[pos] != *bv {
                    return Err(Error::BadBlocks(format!(
                        "block variable `{}` does not match the variable list (blocks must \
                         partition the variables in order)",
                        bv
                    )));
                }
                pos += 1;
            }
            built.push(Block { start, len: pos - start, order: *order });
        }
        if pos != names.len() {
            return Err(Error::BadBlocks(format!(
                "variable `{}` belongs to no block",
                names[pos]
            )));
        }
        Ok(Ring(Arc::new(RingCtx { vars: names, blocks: built })))
    }

    /// Fully local ring on the given variables.
    pub fn local(vars: &[&str]) -> Result<Ring> {
        Ring::new(vars, &[(vars, BlockOrder::LocalDegRevLex)])
    }

    /// Fully global ring on the given variables.
    pub fn global(vars: &[&str]) -> Result<Ring> {
        Ring::new(vars, &[(vars, BlockOrder::GlobalDegRevLex)])
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn blocks(&self) -> &[Block] {
        &self.0.blocks
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.0
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    pub fn is_fully_local(&self) -> bool {
        self.0.blocks.iter().all(|b| b.order == BlockOrder::LocalDegRevLex)
    }

    /// Compare two exponent vectors under the block ordering.
    pub fn cmp_exp(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), self.nvars());
        debug_assert_eq!(b.len(), self.nvars());
        for blk in &self.0.blocks {
            let r = blk.start..blk.start + blk.len;
            let da: u64 = a[r.clone()].iter().map(|&e| e as u64).sum();
            let db: u64 = b[r.clone()].iter().map(|&e| e as u64).sum();
            let by_deg = match blk.order {
                BlockOrder::GlobalDegRevLex => da.cmp(&db),
                BlockOrder::LocalDegRevLex => db.cmp(&da),
            };
            if by_deg != Ordering::Equal {
                return by_deg;
            }
            // Reverse lexicographic tie-break, shared by both kinds: the
            // monomial whose last differing exponent is smaller is larger.
            for i in r.rev() {
                if a[i] != b[i] {
                    return b[i].cmp(&a[i]);
                }
            }
        }
        Ordering::Equal
    }

    /// Compare module monomials: position over term, lower component first.
    pub fn cmp_module(&self, ca: u32, a: &[u32], cb: u32, b: &[u32]) -> Ordering {
        match cb.cmp(&ca) {
            Ordering::Equal => self.cmp_exp(a, b),
            ord => ord,
        }
    }

    pub fn total_degree(exp: &[u32]) -> u64 {
        exp.iter().map(|&e| e as u64).sum()
    }

    /// New ring with `front` variables prepended as a leading block. Used to
    /// build elimination contexts: the front block gets a global ordering.
    pub fn with_front_block(&self, front: &[&str], order: BlockOrder) -> Result<Ring> {
        let mut vars: Vec<String> = front.iter().map(|s| s.to_string()).collect();
        for v in &vars {
            if self.0.vars.contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        let n_front = vars.len();
        if n_front == 0 {
            return Err(Error::BadBlocks("empty front block".into()));
        }
        vars.extend(self.0.vars.iter().cloned());
        let mut blocks = vec![Block { start: 0, len: n_front, order }];
        for b in &self.0.blocks {
            blocks.push(Block { start: b.start + n_front, len: b.len, order: b.order });
        }
        Ok(Ring(Arc::new(RingCtx { vars, blocks })))
    }

    /// Subring on a subset of the variables (indices ascending); each block is
    /// restricted, empty blocks dropped.
    pub fn subring(&self, keep: &[usize]) -> Ring {
        let vars: Vec<String> = keep.iter().map(|&i| self.0.vars[i].clone()).collect();
        let mut blocks = Vec::new();
        let mut pos = 0usize;
        for b in &self.0.blocks {
            let len = keep
                .iter()
                .filter(|&&i| i >= b.start && i < b.start + b.len)
                .count();
            if len > 0 {
                blocks.push(Block { start: pos, len, order: b.order });
                pos += len;
            }
        }
        Ring(Arc::new(RingCtx { vars, blocks }))
    }

    /// Indices of `sub`'s variables inside this ring, by name.
    pub fn embedding(&self, sub: &Ring) -> Result<Vec<usize>> {
        sub.vars().iter().map(|v| self.var_index(v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn local_ring_prefers_low_degree() {
        let r = Ring::local(&["x", "y", "z"]).unwrap();
        // 1 > x > x^2 in a local ring.
        assert_eq!(r.cmp_exp(&[0, 0, 0], &[1, 0, 0]), Ordering::Greater);
        assert_eq!(r.cmp_exp(&[1, 0, 0], &[2, 0, 0]), Ordering::Greater);
        // degrevlex tie-break: x^5 > y^3 z^2 (same degree).
        let r2 = Ring::local(&["x", "y", "z"]).unwrap();
        assert_eq!(r2.cmp_exp(&[5, 0, 0], &[0, 3, 2]), Ordering::Greater);
    }

    #[test]
    fn global_ring_prefers_high_degree() {
        let r = Ring::global(&["x", "y"]).unwrap();
        assert_eq!(r.cmp_exp(&[0, 0], &[1, 0]), Ordering::Less);
        assert_eq!(r.cmp_exp(&[2, 0], &[1, 0]), Ordering::Greater);
        // x > y.
        assert_eq!(r.cmp_exp(&[1, 0], &[0, 1]), Ordering::Greater);
    }

    #[test]
    fn block_priority_wins() {
        // front global block on (t), back local on (x): any t-power beats any
        // monomial without t.
        let back = Ring::local(&["x"]).unwrap();
        let r = back.with_front_block(&["t"], BlockOrder::GlobalDegRevLex).unwrap();
        assert_eq!(r.cmp_exp(&[1, 0], &[0, 5]), Ordering::Greater);
        assert_eq!(r.cmp_exp(&[1, 3], &[0, 0]), Ordering::Greater);
    }

    #[test]
    fn rejects_bad_blocks() {
        assert!(Ring::new(&["x"], &[(&["x", "x"], BlockOrder::LocalDegRevLex)]).is_err());
        assert!(Ring::new(&["x", "y"], &[(&["x"], BlockOrder::LocalDegRevLex)]).is_err());
        assert!(Ring::new(&["x", "x"], &[(&["x", "x"], BlockOrder::LocalDegRevLex)]).is_err());
    }

    #[test]
    fn subring_keeps_order_kinds() {
        let r = Ring::local(&["x", "y", "z"]).unwrap();
        let s = r.subring(&[0, 2]);
        assert_eq!(s.vars(), &["x".to_string(), "z".to_string()]);
        assert!(s.is_fully_local());
    }
}
