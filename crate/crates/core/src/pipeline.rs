//! Composites of slot maps `Id_L ⊗ f ⊗ Id_R`, evaluated one basis element
//! at a time so that large tensor powers are never materialized.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::map::{Map, Mode};
use crate::matrix::ExactMatrix;
use crate::setfn::SetFn;

#[derive(Clone, Debug)]
enum Kernel {
    Set(Vec<usize>),
    Linear(Vec<Vec<(usize, Scalar)>>),
    /// A linear map sending every basis vector to a basis vector.
    Monomial(Vec<usize>),
}

#[derive(Clone, Debug)]
struct Step {
    right: usize,
    dom: usize,
    cod: usize,
    kernel: Kernel,
}

/// One tensor factor of a step: either an identity of the given dimension
/// or a map.
#[derive(Clone, Copy, Debug)]
pub enum Factor<'a> {
    Id(usize),
    Map(&'a Map),
}

impl Factor<'_> {
    fn dom(&self) -> usize {
        match self {
            Factor::Id(n) => *n,
            Factor::Map(m) => m.dom(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Pipeline {
    mode: Mode,
    dom: usize,
    cod: usize,
    steps: Vec<Step>,
}

/// Result of comparing two parallel composites on every basis input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub violations: usize,
    pub first: Option<usize>,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

impl Pipeline {
    pub fn new(mode: Mode, dom: usize) -> Self {
        Pipeline {
            mode,
            dom,
            cod: dom,
            steps: Vec::new(),
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    /// Post-composes `map` on the whole current space.
    pub fn then(self, map: &Map) -> Result<Self> {
        self.then_slot(1, map, 1)
    }

    /// Post-composes `Id_left ⊗ map ⊗ Id_right`.
    pub fn then_slot(mut self, left: usize, map: &Map, right: usize) -> Result<Self> {
        map.check_mode(self.mode)?;
        if left * map.dom() * right != self.cod {
            return Err(Error::dims("pipeline step", self.cod, left * map.dom() * right));
        }
        let kernel = match map {
            Map::Set(f) => Kernel::Set(f.table().to_vec()),
            Map::Linear(m) => {
                let cols: Vec<Vec<(usize, Scalar)>> = (0..m.cols()).map(|c| m.column_sparse(c)).collect();
                if cols.iter().all(|c| c.len() == 1 && c[0].1.is_one()) {
                    Kernel::Monomial(cols.iter().map(|c| c[0].0).collect())
                } else {
                    Kernel::Linear(cols)
                }
            }
        };
        let identity = map.dom() == map.cod()
            && match &kernel {
                Kernel::Set(t) | Kernel::Monomial(t) => t.iter().enumerate().all(|(i, &y)| i == y),
                Kernel::Linear(_) => false,
            };
        if identity {
            return Ok(self);
        }
        self.cod = left * map.cod() * right;
        self.steps.push(Step {
            right,
            dom: map.dom(),
            cod: map.cod(),
            kernel,
        });
        Ok(self)
    }

    /// Post-composes the tensor product of `factors`, left to right.
    pub fn then_tensor(mut self, factors: &[Factor<'_>]) -> Result<Self> {
        let total: usize = factors.iter().map(Factor::dom).product();
        if total != self.cod {
            return Err(Error::dims("tensor step", self.cod, total));
        }
        let mut left = 1;
        for (i, factor) in factors.iter().enumerate() {
            let right: usize = factors[i + 1..].iter().map(Factor::dom).product();
            match factor {
                Factor::Id(n) => left *= n,
                Factor::Map(m) => {
                    self = self.then_slot(left, m, right)?;
                    left *= m.cod();
                }
            }
        }
        Ok(self)
    }

    pub fn then_pipeline(mut self, other: &Pipeline) -> Result<Self> {
        if other.mode != self.mode {
            return Err(Error::ModeMismatch);
        }
        if other.dom != self.cod {
            return Err(Error::dims("pipeline concatenation", self.cod, other.dom));
        }
        self.steps.extend(other.steps.iter().cloned());
        self.cod = other.cod;
        Ok(self)
    }

    fn field(&self) -> Option<FieldSpec> {
        match self.mode {
            Mode::Set => None,
            Mode::Linear(f) => Some(f),
        }
    }

    /// Image of basis element `x` in set mode.
    pub fn eval_set(&self, mut x: usize) -> usize {
        for step in &self.steps {
            let Kernel::Set(table) = &step.kernel else {
                unreachable!("set pipeline holds set kernels")
            };
            let (l, mid, r) = split(x, step.dom, step.right);
            x = (l * step.cod + table[mid]) * step.right + r;
        }
        x
    }

    /// Image of basis element `x` as sorted nonzero `(index, coefficient)` pairs.
    pub fn eval_linear(&self, x: usize) -> Vec<(usize, Scalar)> {
        let f = self.field().expect("linear pipeline");
        let mut current: Vec<(usize, Scalar)> = alloc::vec![(x, f.one())];
        for step in &self.steps {
            let cols = match &step.kernel {
                Kernel::Linear(cols) => cols,
                Kernel::Monomial(table) => {
                    for (idx, _) in current.iter_mut() {
                        let (l, mid, r) = split(*idx, step.dom, step.right);
                        *idx = (l * step.cod + table[mid]) * step.right + r;
                    }
                    current = merge_sorted(f, current);
                    continue;
                }
                Kernel::Set(_) => unreachable!("linear pipeline holds linear kernels"),
            };
            let mut next: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (idx, coef) in &current {
                let (l, mid, r) = split(*idx, step.dom, step.right);
                for (y, c) in &cols[mid] {
                    let out = (l * step.cod + y) * step.right + r;
                    let term = if c.is_one() { coef.clone() } else { f.mul(coef, c) };
                    next.entry(out)
                        .and_modify(|acc| *acc = f.add(acc, &term))
                        .or_insert(term);
                }
            }
            current = next.into_iter().filter(|(_, s)| !s.is_zero()).collect();
        }
        current
    }

    pub fn materialize(&self) -> Map {
        match self.mode {
            Mode::Set => Map::Set(
                SetFn::from_fn(self.dom, self.cod, |x| self.eval_set(x))
                    .expect("pipeline stays in range"),
            ),
            Mode::Linear(f) => {
                let mut m = ExactMatrix::zeros(f, self.cod, self.dom);
                for x in 0..self.dom {
                    for (y, s) in self.eval_linear(x) {
                        m.accumulate(y, x, &s);
                    }
                }
                Map::Linear(m)
            }
        }
    }

    /// Compares two parallel composites on every basis input.
    pub fn compare(&self, other: &Pipeline) -> Result<Comparison> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::dims("compared composites", self.dom, other.dom));
        }
        let mut cmp = Comparison {
            violations: 0,
            first: None,
        };
        for x in 0..self.dom {
            let same = match self.mode {
                Mode::Set => self.eval_set(x) == other.eval_set(x),
                Mode::Linear(_) => self.eval_linear(x) == other.eval_linear(x),
            };
            if !same {
                cmp.violations += 1;
                cmp.first.get_or_insert(x);
            }
        }
        Ok(cmp)
    }
}

/// Sorts by index and adds coefficients of repeated indices.
fn merge_sorted(f: FieldSpec, mut v: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
    if v.windows(2).all(|w| w[0].0 < w[1].0) {
        return v;
    }
    v.sort_by_key(|(i, _)| *i);
    let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(v.len());
    for (i, s) in v {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = f.add(acc, &s),
            _ => out.push((i, s)),
        }
    }
    out.retain(|(_, s)| !s.is_zero());
    out
}

fn split(x: usize, dom: usize, right: usize) -> (usize, usize, usize) {
    let r = x % right;
    let rest = x / right;
    (rest / dom, rest % dom, r)
}

/// Compares two maps with the same shape on every basis input.
pub fn compare_maps(a: &Map, b: &Map) -> Result<Comparison> {
    let pa = Pipeline::new(a.mode(), a.dom()).then(a)?;
    let pb = Pipeline::new(a.mode(), b.dom()).then(b)?;
    pa.compare(&pb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Mode = Mode::Linear(FieldSpec::Rationals);

    fn matrix(rows: usize, cols: usize, v: &[i64]) -> Map {
        Map::Linear(ExactMatrix::from_ints(FieldSpec::Rationals, rows, cols, v).unwrap())
    }

    #[test]
    fn slot_application_matches_kron() {
        let f = matrix(2, 2, &[1, 2, 3, 4]);
        let id3 = Map::identity(Q, 3);
        let direct = id3.tensor(&f).unwrap().tensor(&Map::identity(Q, 2)).unwrap();
        let p = Pipeline::new(Q, 12).then_slot(3, &f, 2).unwrap();
        assert_eq!(p.materialize(), direct);
    }

    #[test]
    fn tensor_step_of_two_maps() {
        let f = matrix(1, 2, &[1, -1]);
        let g = matrix(3, 2, &[1, 0, 0, 1, 2, 2]);
        let p = Pipeline::new(Q, 4)
            .then_tensor(&[Factor::Map(&f), Factor::Map(&g)])
            .unwrap();
        assert_eq!(p.materialize(), f.tensor(&g).unwrap());
    }

    #[test]
    fn monomial_steps_merge_repeated_outputs() {
        let a = matrix(2, 2, &[1, 1, 1, -1]);
        let b = matrix(1, 2, &[1, 1]);
        let p = Pipeline::new(Q, 2).then(&a).unwrap().then(&b).unwrap();
        assert_eq!(p.materialize(), b.compose(&a).unwrap());
        assert_eq!(p.eval_linear(1), alloc::vec![]);
    }

    #[test]
    fn comparison_counts_violations() {
        let a = Map::Set(SetFn::identity(3));
        let b = Map::Set(SetFn::new(alloc::vec![0, 2, 1], 3).unwrap());
        let cmp = compare_maps(&a, &b).unwrap();
        assert_eq!(cmp.violations, 2);
        assert_eq!(cmp.first, Some(1));
    }

    proptest! {
        #[test]
        fn set_and_linear_evaluation_agree(t in proptest::collection::vec(0usize..2, 4), left in 1usize..3, right in 1usize..3) {
            let f = SetFn::new(t, 2).unwrap();
            let set = Pipeline::new(Mode::Set, left * 4 * right)
                .then_slot(left, &Map::Set(f.clone()), right).unwrap().materialize();
            let lin = Pipeline::new(Q, left * 4 * right)
                .then_slot(left, &Map::Linear(ExactMatrix::from_setfn(FieldSpec::Rationals, &f)), right).unwrap().materialize();
            prop_assert_eq!(set.linearize(FieldSpec::Rationals).unwrap(), lin.as_linear().unwrap().clone());
        }
    }
}
