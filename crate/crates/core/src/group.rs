//! Finite groups given by Cayley tables, and group crossed modules.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{require, Error, Result};
use crate::report::{CheckEntry, Report};

/// A finite group with Cayley table `mul(a, b) = table[a * n + b]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

pub(crate) fn flatten_square(rows: &[Vec<usize>], what: &str) -> Result<(usize, Vec<usize>)> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::malformed(format!("{what} table is empty")));
    }
    let mut table = Vec::with_capacity(n * n);
    for row in rows {
        if row.len() != n {
            return Err(Error::malformed(format!(
                "{what} table is not square: row of length {} in a table with {n} rows",
                row.len()
            )));
        }
        for &v in row {
            if v >= n {
                return Err(Error::malformed(format!("{what} table entry {v} out of range")));
            }
            table.push(v);
        }
    }
    Ok((n, table))
}

/// Checks the group axioms; returns the group on success.
pub fn check_group(rows: &[Vec<usize>]) -> Result<(Report, Option<FiniteGroup>)> {
    let (n, table) = flatten_square(rows, "group")?;
    let mul = |a: usize, b: usize| table[a * n + b];
    let mut report = Report::new();

    let mut assoc = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    assoc.push(vec![a, b, c]);
                }
            }
        }
    }
    report.push(CheckEntry::from_violations("associativity", "associativity", &assoc));

    let identity = (0..n).find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a));
    let Some(e) = identity else {
        report.push(CheckEntry::failed("identity", "two-sided identity", vec![], n));
        return Ok((report, None));
    };
    report.push(CheckEntry::passed("identity", "two-sided identity"));

    let mut missing = Vec::new();
    let inverse: Vec<usize> = (0..n)
        .map(|a| {
            (0..n).find(|&b| mul(a, b) == e && mul(b, a) == e).unwrap_or_else(|| {
                missing.push(vec![a]);
                0
            })
        })
        .collect();
    report.push(CheckEntry::from_violations("inverses", "two-sided inverses", &missing));

    let group = report.passed().then_some(FiniteGroup {
        n,
        table,
        identity: e,
        inverse,
    });
    Ok((report, group))
}

impl FiniteGroup {
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let (report, group) = check_group(rows)?;
        group.ok_or_else(|| Error::law(report))
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        Self::from_table(&rows).expect("built-in group satisfies the axioms")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        Self::from_fn(n, |a, b| (a + b) % n)
    }

    /// The symmetric group on `n` letters, elements in lexicographic order of
    /// their images, with product "first `g`, then `h`".
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        Self::from_permutations(&perms)
    }

    /// The group of a list of permutations closed under composition, with
    /// product "first `g`, then `h`": `(g h)(x) = h(g(x))`.
    pub(crate) fn from_permutations(perms: &[Vec<usize>]) -> Self {
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
        Self::from_fn(perms.len(), |a, b| {
            let composed: Vec<usize> = perms[a].iter().map(|&x| perms[b][x]).collect();
            index(&composed)
        })
    }

    /// The dihedral group of order `2n`; `r^i s^j` has index `j * n + i`.
    pub fn dihedral(n: usize) -> Self {
        Self::from_fn(2 * n, |a, b| {
            let (i, ja) = (a % n, a / n);
            let (k, jb) = (b % n, b / n);
            let rot = if ja == 0 { (i + k) % n } else { (i + n - k) % n };
            ((ja + jb) % 2) * n + rot
        })
    }

    /// The quaternion group: `±1, ±i, ±j, ±k` at indices `0..8` as
    /// `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion() -> Self {
        // unit products as (sign flip, unit): units 0=1, 1=i, 2=j, 3=k
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        Self::from_fn(8, |a, b| {
            let (sa, ua) = (a % 2 == 1, a / 2);
            let (sb, ub) = (b % 2 == 1, b / 2);
            let (flip, u) = UNIT[ua][ub];
            2 * u + usize::from(sa ^ sb ^ flip)
        })
    }

    /// `G × H` with `(g, h)` at index `g * |H| + h`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let m = b.n;
        Self::from_fn(a.n * m, |x, y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m))
    }

    /// Named groups of order at most eight, one per isomorphism class.
    pub fn small_groups() -> Vec<(String, FiniteGroup)> {
        let c = FiniteGroup::cyclic;
        let mut out: Vec<(String, FiniteGroup)> = (1..=8).map(|n| (format!("Z{n}"), c(n))).collect();
        out.push(("Z2xZ2".into(), Self::direct_product(&c(2), &c(2))));
        out.push(("S3".into(), Self::symmetric(3)));
        out.push(("Z2xZ4".into(), Self::direct_product(&c(2), &c(4))));
        out.push((
            "Z2xZ2xZ2".into(),
            Self::direct_product(&Self::direct_product(&c(2), &c(2)), &c(2)),
        ));
        out.push(("D4".into(), Self::dihedral(4)));
        out.push(("Q8".into(), Self::quaternion()));
        out
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `h⁻¹ g h`.
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), g), h)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// `(K, G, π, ·)`: a right action of `G` on `K` by automorphisms with
/// `k · π(k') = k'⁻¹ k k'` and `π(k · g) = g⁻¹ π(k) g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCrossedModule {
    k: FiniteGroup,
    g: FiniteGroup,
    pi: Vec<usize>,
    action: Vec<usize>,
}

impl GroupCrossedModule {
    /// Shape-checked constructor; `action[k][g] = k · g`.
    pub fn new(k: FiniteGroup, g: FiniteGroup, pi: Vec<usize>, action: &[Vec<usize>]) -> Result<Self> {
        if pi.len() != k.size() {
            return Err(Error::dims("crossed module map", k.size(), pi.len()));
        }
        if pi.iter().any(|&x| x >= g.size()) {
            return Err(Error::malformed("crossed module map leaves the group"));
        }
        if action.len() != k.size() {
            return Err(Error::dims("action table rows", k.size(), action.len()));
        }
        let mut flat = Vec::with_capacity(k.size() * g.size());
        for row in action {
            if row.len() != g.size() {
                return Err(Error::dims("action table columns", g.size(), row.len()));
            }
            if row.iter().any(|&x| x >= k.size()) {
                return Err(Error::malformed("action table entry out of range"));
            }
            flat.extend_from_slice(row);
        }
        Ok(GroupCrossedModule {
            k,
            g,
            pi,
            action: flat,
        })
    }

    /// Shape-checked constructor that also requires the crossed module axioms.
    pub fn checked(k: FiniteGroup, g: FiniteGroup, pi: Vec<usize>, action: &[Vec<usize>]) -> Result<Self> {
        let x = Self::new(k, g, pi, action)?;
        require(check_group_crossed_module(&x))?;
        Ok(x)
    }

    /// `(G, G, Id, conjugation)`.
    pub fn identity(g: &FiniteGroup) -> Self {
        let action: Vec<Vec<usize>> = (0..g.size())
            .map(|k| (0..g.size()).map(|h| g.conj(k, h)).collect())
            .collect();
        Self::new(g.clone(), g.clone(), (0..g.size()).collect(), &action).expect("well-shaped")
    }

    pub fn k(&self) -> &FiniteGroup {
        &self.k
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn pi(&self, k: usize) -> usize {
        self.pi[k]
    }

    pub fn pi_table(&self) -> &[usize] {
        &self.pi
    }

    /// `k · g`.
    pub fn act(&self, k: usize, g: usize) -> usize {
        self.action[k * self.g.size() + g]
    }

    pub fn action_rows(&self) -> Vec<Vec<usize>> {
        self.action.chunks(self.g.size()).map(<[usize]>::to_vec).collect()
    }
}

pub fn check_group_crossed_module(x: &GroupCrossedModule) -> Report {
    let (k, g) = (&x.k, &x.g);
    let (nk, ng) = (k.size(), g.size());
    let mut report = Report::new();

    let mut bad = Vec::new();
    for a in 0..nk {
        for b in 0..nk {
            if x.pi(k.mul(a, b)) != g.mul(x.pi(a), x.pi(b)) {
                bad.push(vec![a, b]);
            }
        }
    }
    report.push(CheckEntry::from_violations("pi-morphism", "group morphism", &bad));

    let mut bad = Vec::new();
    for a in 0..nk {
        if x.act(a, g.identity()) != a {
            bad.push(vec![a, g.identity(), g.identity()]);
        }
        for s in 0..ng {
            for t in 0..ng {
                if x.act(x.act(a, s), t) != x.act(a, g.mul(s, t)) {
                    bad.push(vec![a, s, t]);
                }
            }
        }
    }
    report.push(CheckEntry::from_violations("right-action", "right group action", &bad));

    let mut bad = Vec::new();
    for a in 0..nk {
        for b in 0..nk {
            for s in 0..ng {
                if x.act(k.mul(a, b), s) != k.mul(x.act(a, s), x.act(b, s)) {
                    bad.push(vec![a, b, s]);
                }
            }
        }
    }
    report.push(CheckEntry::from_violations(
        "action-by-automorphisms",
        "action by automorphisms",
        &bad,
    ));

    let mut bad = Vec::new();
    for a in 0..nk {
        for b in 0..nk {
            if x.act(a, x.pi(b)) != k.conj(a, b) {
                bad.push(vec![a, b]);
            }
        }
    }
    report.push(CheckEntry::from_violations(
        "peiffer",
        "k · π(k') = k'⁻¹ k k'",
        &bad,
    ));

    let mut bad = Vec::new();
    for a in 0..nk {
        for s in 0..ng {
            if x.pi(x.act(a, s)) != g.conj(x.pi(a), s) {
                bad.push(vec![a, s]);
            }
        }
    }
    report.push(CheckEntry::from_violations(
        "equivariance",
        "π(k · g) = g⁻¹ π(k) g",
        &bad,
    ));
    report
}
