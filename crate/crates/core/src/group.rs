//! Finite groups as validated Cayley tables, and their centralizer data.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::perm::{PermError, Permutation};
use crate::subset::Subset;

/// Above this order associativity is spot-checked instead of verified on
/// every triple.
pub const ASSOCIATIVITY_EXHAUSTIVE_LIMIT: usize = 256;
/// Number of random triples checked above [`ASSOCIATIVITY_EXHAUSTIVE_LIMIT`].
pub const ASSOCIATIVITY_SPOT_CHECKS: usize = 100_000;
/// Default bound on the size of a permutation closure.
pub const DEFAULT_CLOSURE_CAP: usize = 1024;

const SPOT_CHECK_SEED: u64 = 0x00C0_FFEE_D00D;

/// Why a table is not the Cayley table of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotAGroup {
    Empty,
    NotSquare {
        row: usize,
        len: usize,
    },
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    NonLatinRow {
        row: usize,
        repeated: usize,
    },
    NonLatinColumn {
        col: usize,
        repeated: usize,
    },
    NoIdentity,
    NonAssociative {
        a: usize,
        b: usize,
        c: usize,
    },
    MissingInverse {
        element: usize,
    },
}

impl fmt::Display for NotAGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotAGroup::Empty => write!(f, "empty table"),
            NotAGroup::NotSquare { row, len } => {
                write!(f, "table is not square: row {row} has {len} entries")
            }
            NotAGroup::EntryOutOfRange { row, col, value } => {
                write!(f, "entry [{row}][{col}] = {value} is not an element index")
            }
            NotAGroup::NonLatinRow { row, repeated } => {
                write!(f, "non-Latin row {row}: {repeated} repeated")
            }
            NotAGroup::NonLatinColumn { col, repeated } => {
                write!(f, "non-Latin column {col}: {repeated} repeated")
            }
            NotAGroup::NoIdentity => write!(f, "no identity element"),
            NotAGroup::NonAssociative { a, b, c } => {
                write!(f, "not associative at ({a}, {b}, {c})")
            }
            NotAGroup::MissingInverse { element } => write!(f, "element {element} has no inverse"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    NotAGroup(NotAGroup),
    NameCount { expected: usize, got: usize },
    ClosureCapExceeded { cap: usize },
    DegreeMismatch { expected: usize, got: usize },
    Permutation(PermError),
    UnknownSpec(String),
    SizeCapExceeded { requested: usize, cap: usize },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::NotAGroup(r) => write!(f, "not a group: {r}"),
            GroupError::NameCount { expected, got } => {
                write!(f, "expected {expected} element names, got {got}")
            }
            GroupError::ClosureCapExceeded { cap } => {
                write!(f, "permutation closure exceeds {cap} elements")
            }
            GroupError::DegreeMismatch { expected, got } => {
                write!(
                    f,
                    "generators must share one degree (found {expected} and {got})"
                )
            }
            GroupError::Permutation(e) => write!(f, "{e}"),
            GroupError::UnknownSpec(s) => write!(f, "unknown group spec {s:?}"),
            GroupError::SizeCapExceeded { requested, cap } => {
                write!(f, "requested size {requested} exceeds the cap {cap}")
            }
        }
    }
}

impl core::error::Error for GroupError {}

impl From<NotAGroup> for GroupError {
    fn from(r: NotAGroup) -> Self {
        GroupError::NotAGroup(r)
    }
}

impl From<PermError> for GroupError {
    fn from(e: PermError) -> Self {
        GroupError::Permutation(e)
    }
}

/// A finite group given by its multiplication table.
///
/// Entry `(i, j)` of the table is the index of `gᵢ·gⱼ`. Tables are validated
/// on construction and immutable afterwards.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
    names: Vec<String>,
    identity: usize,
    inverses: Vec<usize>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("names", &self.names)
            .finish()
    }
}

impl GroupTable {
    /// Validates a raw Cayley table. The identity is discovered from the
    /// table. An empty `names` list gets default names `e0, e1, …`.
    pub fn from_cayley(raw: Vec<Vec<usize>>, names: Vec<String>) -> Result<Self, GroupError> {
        let n = raw.len();
        if n == 0 {
            return Err(NotAGroup::Empty.into());
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, entries) in raw.iter().enumerate() {
            if entries.len() != n {
                return Err(NotAGroup::NotSquare {
                    row,
                    len: entries.len(),
                }
                .into());
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(NotAGroup::EntryOutOfRange { row, col, value }.into());
                }
            }
            table.extend_from_slice(entries);
        }
        let names = if names.is_empty() {
            (0..n).map(|i| format!("e{i}")).collect()
        } else {
            names
        };
        if names.len() != n {
            return Err(GroupError::NameCount {
                expected: n,
                got: names.len(),
            });
        }
        Self::from_flat(table, names)
    }

    pub(crate) fn from_flat(table: Vec<usize>, names: Vec<String>) -> Result<Self, GroupError> {
        let n = names.len();
        debug_assert_eq!(table.len(), n * n);
        if n == 0 {
            return Err(NotAGroup::Empty.into());
        }
        check_latin(&table, n)?;
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| table[e * n + j] == j && table[j * n + e] == j))
            .ok_or(NotAGroup::NoIdentity)?;
        check_associative(&table, n)?;
        let mut inverses = Vec::with_capacity(n);
        for i in 0..n {
            let inv = (0..n)
                .find(|&j| table[i * n + j] == identity)
                .ok_or(NotAGroup::MissingInverse { element: i })?;
            inverses.push(inv);
        }
        Ok(Self {
            order: n,
            table,
            names,
            identity,
            inverses,
        })
    }

    /// Closure of permutation generators under composition, enumerated
    /// breadth-first from the identity (index 0). Products compose left to
    /// right: `gᵢ·gⱼ` applies `gᵢ` first. Names are cycle notation.
    pub fn from_generators(gens: &[Permutation]) -> Result<Self, GroupError> {
        Self::from_generators_capped(gens, DEFAULT_CLOSURE_CAP)
    }

    pub fn from_generators_capped(gens: &[Permutation], cap: usize) -> Result<Self, GroupError> {
        let degree = gens.first().map_or(0, Permutation::degree);
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                got: g.degree(),
            });
        }
        let (elements, index) = closure(gens, degree, cap)?;
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&a.then(b)]);
            }
        }
        let names = elements.iter().map(|p| p.to_string()).collect();
        Self::from_flat(table, names)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Row `a` of the table: the products `a·b` for every `b`.
    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    /// The table as nested rows, the inverse of [`GroupTable::from_cayley`].
    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.row(a).to_vec()).collect()
    }

    /// Relabels elements so that new index `k` holds old element `order[k]`.
    pub fn reindexed(&self, order: &[usize]) -> Self {
        let n = self.order;
        assert_eq!(order.len(), n, "reindexing needs a full permutation");
        let mut position = alloc::vec![usize::MAX; n];
        for (k, &old) in order.iter().enumerate() {
            position[old] = k;
        }
        let mut table = Vec::with_capacity(n * n);
        for &a in order {
            for &b in order {
                table.push(position[self.mul(a, b)]);
            }
        }
        Self {
            order: n,
            table,
            names: order.iter().map(|&i| self.names[i].clone()).collect(),
            identity: position[self.identity],
            inverses: order.iter().map(|&i| position[self.inverses[i]]).collect(),
        }
    }

    /// Returns a copy with element names replaced.
    pub fn renamed(mut self, names: Vec<String>) -> Result<Self, GroupError> {
        if names.len() != self.order {
            return Err(GroupError::NameCount {
                expected: self.order,
                got: names.len(),
            });
        }
        self.names = names;
        Ok(self)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| (i + 1..n).all(|j| self.commutes(i, j)))
    }

    pub fn centralizer(&self, v: usize) -> Subset {
        Subset::from_indices(self.order, (0..self.order).filter(|&u| self.commutes(u, v)))
    }

    pub fn center(&self) -> Subset {
        let n = self.order;
        Subset::from_indices(n, (0..n).filter(|&u| (0..n).all(|a| self.commutes(u, a))))
    }

    /// Whether the elements of `s` pairwise commute.
    pub fn is_abelian_subset(&self, s: &Subset) -> bool {
        let members = s.to_vec();
        members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| self.commutes(a, b)))
    }

    /// Every pair of non-central centralizers is either equal or meets
    /// exactly in the center. Abelian groups hold vacuously.
    pub fn satisfies_con(&self) -> ConCheckResult {
        Centralizers::of(self).con_check()
    }

    /// Every non-identity element has an abelian centralizer.
    pub fn is_centralizer_abelian(&self) -> bool {
        if self.is_abelian() {
            return true;
        }
        let cz = Centralizers::of(self);
        let mut distinct: Vec<&Subset> = Vec::new();
        for v in (0..self.order).filter(|&v| v != self.identity) {
            let c = cz.of_element(v);
            if !distinct.contains(&c) {
                distinct.push(c);
            }
        }
        distinct.into_iter().all(|c| self.is_abelian_subset(c))
    }

    /// Non-central `u` such that every non-central `v` has `C(u) = C(v)` or
    /// `C(u) ∩ C(v) = Z(G)`.
    pub fn condi_elements(&self) -> Vec<usize> {
        Centralizers::of(self).condi_elements()
    }
}

fn check_latin(table: &[usize], n: usize) -> Result<(), NotAGroup> {
    let mut seen = alloc::vec![usize::MAX; n];
    for row in 0..n {
        for col in 0..n {
            let v = table[row * n + col];
            if seen[v] == row {
                return Err(NotAGroup::NonLatinRow { row, repeated: v });
            }
            seen[v] = row;
        }
    }
    seen.fill(usize::MAX);
    for col in 0..n {
        for row in 0..n {
            let v = table[row * n + col];
            if seen[v] == col {
                return Err(NotAGroup::NonLatinColumn { col, repeated: v });
            }
            seen[v] = col;
        }
    }
    Ok(())
}

fn check_associative(table: &[usize], n: usize) -> Result<(), NotAGroup> {
    let m = |a: usize, b: usize| table[a * n + b];
    let holds = |a, b, c| m(m(a, b), c) == m(a, m(b, c));
    if n <= ASSOCIATIVITY_EXHAUSTIVE_LIMIT {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !holds(a, b, c) {
                        return Err(NotAGroup::NonAssociative { a, b, c });
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SPOT_CHECK_SEED);
        for _ in 0..ASSOCIATIVITY_SPOT_CHECKS {
            let (a, b, c) = (
                rng.random_range(0..n),
                rng.random_range(0..n),
                rng.random_range(0..n),
            );
            if !holds(a, b, c) {
                return Err(NotAGroup::NonAssociative { a, b, c });
            }
        }
    }
    Ok(())
}

type ClosureIndex = BTreeMap<Permutation, usize>;

fn closure(
    gens: &[Permutation],
    degree: usize,
    cap: usize,
) -> Result<(Vec<Permutation>, ClosureIndex), GroupError> {
    let id = Permutation::identity(degree);
    let mut elements = alloc::vec![id.clone()];
    let mut index = BTreeMap::new();
    index.insert(id, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let p = elements[i].then(g);
            if !index.contains_key(&p) {
                if elements.len() == cap {
                    return Err(GroupError::ClosureCapExceeded { cap });
                }
                index.insert(p.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(p);
            }
        }
    }
    Ok((elements, index))
}

/// Outcome of the centralizer trichotomy check over all non-central pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConCheckResult {
    pub holds: bool,
    /// A non-central pair with `C(u) ≠ C(v)` and `C(u) ∩ C(v) ≠ Z(G)`.
    pub witness: Option<(usize, usize)>,
}

/// Center and all centralizers of one group, computed once.
#[derive(Debug, Clone)]
pub struct Centralizers {
    center: Subset,
    centralizers: Vec<Subset>,
}

impl Centralizers {
    pub fn of(g: &GroupTable) -> Self {
        let centralizers: Vec<Subset> = (0..g.order()).map(|v| g.centralizer(v)).collect();
        let center = Subset::from_indices(
            g.order(),
            (0..g.order()).filter(|&v| centralizers[v].len() == g.order()),
        );
        Self {
            center,
            centralizers,
        }
    }

    pub fn order(&self) -> usize {
        self.centralizers.len()
    }

    pub fn center(&self) -> &Subset {
        &self.center
    }

    pub fn of_element(&self, v: usize) -> &Subset {
        &self.centralizers[v]
    }

    pub fn is_abelian(&self) -> bool {
        self.center.len() == self.order()
    }

    pub fn noncentral(&self) -> Subset {
        self.center.complement()
    }

    /// `C(u) ∖ Z(G)`.
    pub fn component_of(&self, u: usize) -> Subset {
        self.centralizers[u].difference(&self.center)
    }

    /// Smallest centralizer size.
    pub fn min_size(&self) -> usize {
        self.centralizers.iter().map(Subset::len).min().unwrap_or(0)
    }

    fn trichotomy(&self, u: usize, v: usize) -> bool {
        let (cu, cv) = (&self.centralizers[u], &self.centralizers[v]);
        cu == cv || cu.intersection_len(cv) == self.center.len()
    }

    pub fn con_check(&self) -> ConCheckResult {
        let nc = self.noncentral().to_vec();
        for (i, &u) in nc.iter().enumerate() {
            for &v in &nc[i + 1..] {
                if !self.trichotomy(u, v) {
                    return ConCheckResult {
                        holds: false,
                        witness: Some((u, v)),
                    };
                }
            }
        }
        ConCheckResult {
            holds: true,
            witness: None,
        }
    }

    pub fn condi_elements(&self) -> Vec<usize> {
        let nc = self.noncentral().to_vec();
        nc.iter()
            .copied()
            .filter(|&u| nc.iter().all(|&v| self.trichotomy(u, v)))
            .collect()
    }
}
