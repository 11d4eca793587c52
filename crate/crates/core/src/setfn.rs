//! Maps between finite sets `{0, …, n-1}`.
//!
//! Pairs `(x, y)` in `X × Y` are indexed `x * |Y| + y`, matching the tensor
//! convention used for matrices.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFn {
    cod: usize,
    table: Vec<usize>,
}

impl SetFn {
    pub fn new(table: Vec<usize>, cod: usize) -> Result<Self> {
        if let Some(bad) = table.iter().find(|&&y| y >= cod) {
            return Err(Error::malformed(format!(
                "value {bad} outside codomain of size {cod}"
            )));
        }
        Ok(SetFn { cod, table })
    }

    pub fn from_fn(dom: usize, cod: usize, f: impl FnMut(usize) -> usize) -> Result<Self> {
        Self::new((0..dom).map(f).collect(), cod)
    }

    pub fn identity(n: usize) -> Self {
        SetFn {
            cod: n,
            table: (0..n).collect(),
        }
    }

    /// `X × Y → Y × X` with `|X| = a`, `|Y| = b`.
    pub fn flip(a: usize, b: usize) -> Self {
        let mut table = vec![0; a * b];
        for x in 0..a {
            for y in 0..b {
                table[x * b + y] = y * a + x;
            }
        }
        SetFn { cod: a * b, table }
    }

    pub fn dom(&self) -> usize {
        self.table.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &SetFn) -> Result<SetFn> {
        if g.cod != self.dom() {
            return Err(Error::dims("set map composition", self.dom(), g.cod));
        }
        Ok(SetFn {
            cod: self.cod,
            table: g.table.iter().map(|&x| self.table[x]).collect(),
        })
    }

    /// `self × other`, acting factorwise on pairs.
    pub fn product(&self, other: &SetFn) -> SetFn {
        let mut table = Vec::with_capacity(self.dom() * other.dom());
        for &x in &self.table {
            for &y in &other.table {
                table.push(x * other.cod + y);
            }
        }
        SetFn {
            cod: self.cod * other.cod,
            table,
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.table.iter().all(|&y| !core::mem::replace(&mut seen[y], true))
    }

    pub fn is_bijective(&self) -> bool {
        self.dom() == self.cod && self.is_injective()
    }

    pub fn inverse(&self) -> Option<SetFn> {
        if !self.is_bijective() {
            return None;
        }
        let mut table = vec![0; self.cod];
        for (x, &y) in self.table.iter().enumerate() {
            table[y] = x;
        }
        Some(SetFn {
            cod: self.dom(),
            table,
        })
    }

    pub fn pow(&self, k: u32) -> Result<SetFn> {
        if self.dom() != self.cod {
            return Err(Error::dims("set map power", self.dom(), self.cod));
        }
        let mut acc = SetFn::identity(self.cod);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn fixed_points(&self) -> usize {
        self.table
            .iter()
            .enumerate()
            .filter(|&(x, &y)| x == y)
            .count()
    }
}

/// Splits a left-major index into its coordinates.
pub fn decode(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
    out
}

/// Inverse of [`decode`].
pub fn encode(coords: &[usize], dims: &[usize]) -> usize {
    coords.iter().zip(dims).fold(0, |acc, (&c, &d)| acc * d + c)
}
