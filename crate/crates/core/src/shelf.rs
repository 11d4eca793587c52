//! Shelves, racks and shelf actions on finite sets.
//!
//! Operations are stored as tables with `a ◁ b = table[a * n + b]`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{require, Error, Result};
use crate::group::{flatten_square, permutations, FiniteGroup};
use crate::report::{CheckEntry, Report};
use crate::setfn::SetFn;

/// A binary operation on `{0, …, n-1}` with no law imposed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Magma {
    n: usize,
    table: Vec<usize>,
}

impl Magma {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let (n, table) = flatten_square(rows, "operation")?;
        Ok(Magma { n, table })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// The right translation `t_b : a ↦ a ◁ b`.
    pub fn translation(&self, b: usize) -> SetFn {
        SetFn::from_fn(self.n, self.n, |a| self.op(a, b)).expect("in range")
    }
}

/// All triples violating `(a ◁ b) ◁ c = (a ◁ c) ◁ (b ◁ c)`.
pub fn sd_violations(m: &Magma) -> Vec<Vec<usize>> {
    let n = m.size();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if m.op(m.op(a, b), c) != m.op(m.op(a, c), m.op(b, c)) {
                    out.push(vec![a, b, c]);
                }
            }
        }
    }
    out
}

pub fn check_shelf(m: &Magma) -> Report {
    Report::single(CheckEntry::from_violations(
        "self-distributivity",
        "(a ◁ b) ◁ c = (a ◁ c) ◁ (b ◁ c)",
        &sd_violations(m),
    ))
}

/// A self-distributive operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shelf(Magma);

impl TryFrom<Magma> for Shelf {
    type Error = Error;

    fn try_from(m: Magma) -> Result<Self> {
        require(check_shelf(&m))?;
        Ok(Shelf(m))
    }
}

impl Shelf {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        Magma::from_rows(rows)?.try_into()
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Magma::from_fn(n, f)?.try_into()
    }

    pub fn magma(&self) -> &Magma {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.n
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.0.op(a, b)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.0.rows()
    }

    pub fn is_rack(&self) -> bool {
        (0..self.size()).all(|b| self.0.translation(b).is_bijective())
    }

    pub fn is_quandle(&self) -> bool {
        self.is_rack() && (0..self.size()).all(|a| self.op(a, a) == a)
    }
}

/// A shelf whose translations are bijective, with the inverse operation
/// `(a ◁ b) ◁̃ b = a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rack {
    shelf: Shelf,
    inverse: Vec<usize>,
}

impl Rack {
    pub fn shelf(&self) -> &Shelf {
        &self.shelf
    }

    /// `a ◁̃ b`.
    pub fn inv_op(&self, a: usize, b: usize) -> usize {
        self.inverse[a * self.shelf.size() + b]
    }

    pub fn inverse_rows(&self) -> Vec<Vec<usize>> {
        self.inverse.chunks(self.shelf.size()).map(<[usize]>::to_vec).collect()
    }
}

impl TryFrom<Shelf> for Rack {
    type Error = Error;

    fn try_from(s: Shelf) -> Result<Self> {
        let (report, rack) = check_rack(&s);
        rack.ok_or_else(|| Error::law(report))
    }
}

/// Checks bijectivity of every translation; returns the inverse operation on success.
pub fn check_rack(s: &Shelf) -> (Report, Option<Rack>) {
    let n = s.size();
    let mut bad = Vec::new();
    let mut inverse = vec![0; n * n];
    for b in 0..n {
        match s.0.translation(b).inverse() {
            Some(inv) => {
                for a in 0..n {
                    inverse[a * n + b] = inv.apply(a);
                }
            }
            None => bad.push(vec![b]),
        }
    }
    let report = Report::single(CheckEntry::from_violations(
        "translations-bijective",
        "a ↦ a ◁ b is bijective",
        &bad,
    ));
    let rack = report.passed().then(|| Rack {
        shelf: s.clone(),
        inverse,
    });
    (report, rack)
}

/// Checks `f(a ◁ b) = f(a) ◁ f(b)`.
pub fn check_shelf_morphism(f: &SetFn, r: &Shelf, s: &Shelf) -> Result<Report> {
    if f.dom() != r.size() {
        return Err(Error::dims("shelf morphism domain", r.size(), f.dom()));
    }
    if f.cod() != s.size() {
        return Err(Error::dims("shelf morphism codomain", s.size(), f.cod()));
    }
    let mut bad = Vec::new();
    for a in 0..r.size() {
        for b in 0..r.size() {
            if f.apply(r.op(a, b)) != s.op(f.apply(a), f.apply(b)) {
                bad.push(vec![a, b]);
            }
        }
    }
    Ok(Report::single(CheckEntry::from_violations(
        "shelf-morphism",
        "f(a ◁ b) = f(a) ◁ f(b)",
        &bad,
    )))
}

/// A map `M × S → M`, `(m, s) ↦ m ◂ s`, stored as `table[m * |S| + s]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShelfAction {
    shelf: Shelf,
    m: usize,
    table: Vec<usize>,
}

impl ShelfAction {
    pub fn new(shelf: Shelf, rows: &[Vec<usize>]) -> Result<Self> {
        let ns = shelf.size();
        let m = rows.len();
        let mut table = Vec::with_capacity(m * ns);
        for row in rows {
            if row.len() != ns {
                return Err(Error::dims("action table columns", ns, row.len()));
            }
            if let Some(bad) = row.iter().find(|&&x| x >= m) {
                return Err(Error::malformed(format!("action value {bad} outside the set")));
            }
            table.extend_from_slice(row);
        }
        Ok(ShelfAction { shelf, m, table })
    }

    pub fn shelf(&self) -> &Shelf {
        &self.shelf
    }

    pub fn set_size(&self) -> usize {
        self.m
    }

    pub fn act(&self, m: usize, s: usize) -> usize {
        self.table[m * self.shelf.size() + s]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.shelf.size()).map(<[usize]>::to_vec).collect()
    }

    pub fn as_setfn(&self) -> SetFn {
        SetFn::new(self.table.clone(), self.m).expect("in range")
    }
}

/// Checks `(m ◂ s) ◂ s' = (m ◂ s') ◂ (s ◁ s')`.
pub fn check_shelf_action(a: &ShelfAction) -> Report {
    let s = a.shelf();
    let mut bad = Vec::new();
    for m in 0..a.set_size() {
        for x in 0..s.size() {
            for y in 0..s.size() {
                if a.act(a.act(m, x), y) != a.act(a.act(m, y), s.op(x, y)) {
                    bad.push(vec![m, x, y]);
                }
            }
        }
    }
    Report::single(CheckEntry::from_violations(
        "shelf-action",
        "(m ◂ s) ◂ s' = (m ◂ s') ◂ (s ◁ s')",
        &bad,
    ))
}

/// A shelf with a distinguished element fixed by every translation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedShelf {
    shelf: Shelf,
    point: usize,
}

impl PointedShelf {
    pub fn new(shelf: Shelf, point: usize) -> Result<Self> {
        if point >= shelf.size() {
            return Err(Error::malformed("point outside the shelf"));
        }
        if let Some(b) = (0..shelf.size()).find(|&b| shelf.op(point, b) != point) {
            return Err(Error::malformed(format!("point is moved by translation {b}")));
        }
        Ok(PointedShelf { shelf, point })
    }

    pub fn shelf(&self) -> &Shelf {
        &self.shelf
    }

    pub fn point(&self) -> usize {
        self.point
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardShelf {
    /// `a ◁ b = b⁻¹ a b`.
    Conjugation(FiniteGroup),
    /// `a ◁ b = a + 1 mod n`.
    CyclicMod(usize),
    /// `a ◁ b = 2b - a mod n`.
    Dihedral(usize),
    /// `a ◁ b = f(a)`.
    ConstantMap(Vec<usize>),
    /// `a ◁ b = a`.
    Projection(usize),
}

pub fn standard_shelf(kind: &StandardShelf) -> Result<Shelf> {
    match kind {
        StandardShelf::Conjugation(g) => Shelf::from_fn(g.size(), |a, b| g.conj(a, b)),
        StandardShelf::CyclicMod(n) => Shelf::from_fn(*n, |a, _| (a + 1) % n),
        StandardShelf::Dihedral(n) => Shelf::from_fn(*n, |a, b| (2 * b + n - a) % n),
        StandardShelf::ConstantMap(f) => {
            SetFn::new(f.clone(), f.len())?;
            Shelf::from_fn(f.len(), |a, _| f[a])
        }
        StandardShelf::Projection(n) => Shelf::from_fn(*n, |a, _| a),
    }
}

/// The shelf automorphisms as a group with product "first `g`, then `h`",
/// so that `r · g = g(r)` is a right action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphisms {
    pub group: FiniteGroup,
    /// `perms[g][r] = g(r)`, in lexicographic order.
    pub perms: Vec<Vec<usize>>,
}

impl Automorphisms {
    pub fn index_of(&self, perm: &[usize]) -> Option<usize> {
        self.perms.iter().position(|p| p == perm)
    }
}

/// Enumerates automorphisms by brute force over all permutations, refusing
/// shelves with more than `limit` elements.
pub fn automorphism_group(s: &Shelf, limit: usize) -> Result<Automorphisms> {
    let n = s.size();
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "shelf size for automorphism enumeration",
            limit,
            found: n,
        });
    }
    let perms: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|p| (0..n).all(|a| (0..n).all(|b| p[s.op(a, b)] == s.op(p[a], p[b]))))
        .collect();
    Ok(Automorphisms {
        group: FiniteGroup::from_permutations(&perms),
        perms,
    })
}

/// `σ_SD(a, b) = (b, a ◁ b)` on `X × X`.
pub fn sigma_sd(m: &Magma) -> SetFn {
    let n = m.size();
    SetFn::from_fn(n * n, n * n, |x| {
        let (a, b) = (x / n, x % n);
        b * n + m.op(a, b)
    })
    .expect("in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d3() -> Shelf {
        standard_shelf(&StandardShelf::Dihedral(3)).unwrap()
    }

    #[test]
    fn xor_table_is_not_a_shelf() {
        let m = Magma::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let report = check_shelf(&m);
        assert!(!report.passed());
        assert!(sd_violations(&m).contains(&vec![0, 0, 1]));
        assert!(Shelf::try_from(m).is_err());
    }

    #[test]
    fn malformed_tables_are_errors() {
        assert!(Magma::from_rows(&[vec![0, 1], vec![1]]).is_err());
        assert!(Magma::from_rows(&[vec![0, 2], vec![1, 0]]).is_err());
    }

    #[test]
    fn standard_shelves() {
        let s3 = FiniteGroup::symmetric(3);
        let conj = standard_shelf(&StandardShelf::Conjugation(s3)).unwrap();
        assert!(conj.is_quandle());
        assert!(d3().is_quandle());
        assert!(standard_shelf(&StandardShelf::CyclicMod(3)).unwrap().is_rack());
        let constant = standard_shelf(&StandardShelf::ConstantMap(vec![0, 0, 1])).unwrap();
        assert!(!constant.is_rack());
        assert!(standard_shelf(&StandardShelf::Projection(4)).unwrap().is_quandle());
    }

    #[test]
    fn rack_inverse_undoes_translation() {
        let rack: Rack = standard_shelf(&StandardShelf::CyclicMod(4)).unwrap().try_into().unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(rack.inv_op(rack.shelf().op(a, b), b), a);
            }
        }
    }

    #[test]
    fn identity_onto_cyclic_is_not_a_morphism() {
        let c3 = standard_shelf(&StandardShelf::CyclicMod(3)).unwrap();
        let report = check_shelf_morphism(&SetFn::identity(3), &d3(), &c3).unwrap();
        assert!(!report.passed());
        assert_eq!(report.entries[0].witness, Some(vec![0, 0]));
        assert!(check_shelf_morphism(&SetFn::identity(2), &d3(), &c3).is_err());
    }

    #[test]
    fn dihedral_automorphisms() {
        let aut = automorphism_group(&d3(), 8).unwrap();
        assert_eq!(aut.group.size(), 6);
        assert!(automorphism_group(&d3(), 2).is_err());
        let proj = standard_shelf(&StandardShelf::Projection(3)).unwrap();
        assert_eq!(automorphism_group(&proj, 8).unwrap().group.size(), 6);
    }

    #[test]
    fn regular_action_is_a_shelf_action() {
        let s = d3();
        let act = ShelfAction::new(s.clone(), &s.rows()).unwrap();
        assert!(check_shelf_action(&act).passed());
        let twisted = ShelfAction::new(s, &[vec![1, 1, 1], vec![2, 2, 2], vec![0, 0, 0]]).unwrap();
        assert!(check_shelf_action(&twisted).passed());
        let broken = ShelfAction::new(d3(), &[vec![1, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]).unwrap();
        assert!(!check_shelf_action(&broken).passed());
    }

    #[test]
    fn pointed_shelf_requires_fixed_point() {
        let proj = standard_shelf(&StandardShelf::Projection(2)).unwrap();
        assert!(PointedShelf::new(proj, 1).is_ok());
        assert!(PointedShelf::new(d3(), 0).is_err());
    }
}
