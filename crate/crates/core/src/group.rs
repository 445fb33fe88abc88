//! Finite vertex groups as validated multiplication tables.
//!
//! Every table is normalized so that the identity sits at index 0; the rest
//! of the crate relies on "index 0 means trivial".

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How a group is described in input documents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GroupSpec {
    Cyclic { n: usize },
    Table { table: Vec<Vec<usize>> },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupTable {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    label: String,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable({}, order {})", self.label, self.order)
    }
}

impl GroupTable {
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedTable("cyclic group of order 0".into()));
        }
        let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
        let inverse = (0..n).map(|i| ((n - i) % n) as u32).collect();
        Ok(GroupTable {
            order: n,
            table,
            inverse,
            label: format!("Z_{n}"),
        })
    }

    /// Validates an explicit Cayley table and relabels it so the identity is index 0.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::MalformedTable(format!(
                    "entry {bad} in row {i} is out of range"
                )));
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or(Error::NoIdentity)?;

        // swap labels 0 and `identity`; the swap is its own inverse
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = relabel(rows[relabel(i)][relabel(j)]) as u32;
            }
        }

        let mut inverse = vec![0u32; n];
        for i in 0..n {
            let inv = (0..n)
                .find(|&j| table[i * n + j] == 0 && table[j * n + i] == 0)
                .ok_or(Error::NoInverse { element: i })?;
            inverse[i] = inv as u32;
        }

        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b] as usize;
                for c in 0..n {
                    let bc = table[b * n + c] as usize;
                    if table[ab * n + c] != table[a * n + bc] {
                        return Err(Error::NonAssociative { a, b, c });
                    }
                }
            }
        }

        Ok(GroupTable {
            order: n,
            table,
            inverse,
            label: format!("table(order {n})"),
        })
    }

    pub fn build(spec: &GroupSpec) -> Result<Self> {
        match spec {
            GroupSpec::Cyclic { n } => Self::cyclic(*n),
            GroupSpec::Table { table } => Self::from_table(table),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> u32 {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn contains(&self, a: u32) -> bool {
        (a as usize) < self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Least `n >= 1` with `a^n = 1`.
    pub fn element_order(&self, a: u32) -> usize {
        let mut acc = a;
        let mut n = 1;
        while acc != 0 {
            acc = self.mul(acc, a);
            n += 1;
        }
        n
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = u32> {
        1..self.order as u32
    }
}

/// An element of a specific group table.
#[derive(Debug, Clone)]
pub struct GroupElem {
    pub group: Arc<GroupTable>,
    pub index: u32,
}

impl PartialEq for GroupElem {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && same_group(&self.group, &other.group)
    }
}

impl Eq for GroupElem {}

fn same_group(a: &Arc<GroupTable>, b: &Arc<GroupTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryMode {
    Mul,
    InvOfFirst,
}

impl GroupElem {
    pub fn new(group: Arc<GroupTable>, index: u32) -> Result<Self> {
        if !group.contains(index) {
            return Err(Error::MalformedTable(format!(
                "index {index} out of range for {}",
                group.label()
            )));
        }
        Ok(GroupElem { group, index })
    }

    pub fn is_identity(&self) -> bool {
        self.index == 0
    }

    pub fn query(&self, other: &GroupElem, mode: QueryMode) -> Result<GroupElem> {
        match mode {
            QueryMode::InvOfFirst => Ok(GroupElem {
                group: self.group.clone(),
                index: self.group.inv(self.index),
            }),
            QueryMode::Mul => {
                if !same_group(&self.group, &other.group) {
                    return Err(Error::GroupMismatch);
                }
                Ok(GroupElem {
                    group: self.group.clone(),
                    index: self.group.mul(self.index, other.index),
                })
            }
        }
    }

    pub fn order(&self) -> usize {
        self.group.element_order(self.index)
    }
}
