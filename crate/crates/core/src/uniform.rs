//! Uniform matroids `U_{r,n}`.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::latticepath::GenCatalan;
use crate::matroid::{dedup_good_cycles, Basis, BasisFamily, BasisGraph, GoodCycle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UniformSpec {
    pub r: usize,
    pub n: usize,
}

impl UniformSpec {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if !(n > r && r >= 1) {
            return Err(Error::BadParams(format!("U_{{r,n}} needs n > r >= 1, got r={r}, n={n}")));
        }
        Ok(UniformSpec { r, n })
    }

    /// `3 (n-r-1) (r-1)`, the guaranteed number of good cycles per edge.
    pub fn good_cycle_bound(&self) -> usize {
        3 * (self.n - self.r - 1) * (self.r - 1)
    }

    /// The same matroid as a generalized Catalan matroid.
    pub fn as_lattice_path(&self) -> GenCatalan {
        GenCatalan::uniform(self.r, self.n).expect("r <= n")
    }
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub fn uniform_bases(spec: UniformSpec) -> BasisFamily {
    let bases = (0..spec.n)
        .combinations(spec.r)
        .map(Basis::from_sorted_unchecked)
        .collect();
    BasisFamily::new(spec.n, spec.r, bases).expect("subsets form a family")
}

/// The three templates per `(f, w)` with `f` in `B1 - e` and `w` outside
/// `B1 + g`:
/// A: `B4 = B1 - f + w`, `B3 = B2 - f + w`;
/// B: `B4 = B1 - f + g`, `B3 = B2 - f + w`;
/// C: `B4 = B1 - f + w`, `B3 = B2 - g + w`.
pub fn good_cycles_uniform(spec: UniformSpec, bg: &BasisGraph, b1: usize, b2: usize) -> Result<Vec<GoodCycle>> {
    let (e, g) = bg.exchange(b1, b2)
        .map_err(|err| match err {
            Error::NotAnEdge(..) => Error::InvalidExchange(format!("{b1} and {b2} are not adjacent")),
            other => other,
        })?;
    let fam = bg.family();
    let (x, y) = (fam.basis(b1), fam.basis(b2));
    let mut out = Vec::new();
    for &f in x.elements().iter().filter(|&&f| f != e) {
        for w in (0..spec.n).filter(|&w| w != g && !x.contains(w)) {
            out.push(GoodCycle::from_bases(bg, b1, b2, &y.exchange(f, w), &x.exchange(f, w))?);
            out.push(GoodCycle::from_bases(bg, b1, b2, &y.exchange(f, w), &x.exchange(f, g))?);
            out.push(GoodCycle::from_bases(bg, b1, b2, &y.exchange(g, w), &x.exchange(f, w))?);
        }
    }
    Ok(dedup_good_cycles(out))
}

/// `U_{r,n}` with its basis graph (the Johnson graph `J(n,r)`).
#[derive(Clone, Debug)]
pub struct UniformMatroid {
    spec: UniformSpec,
    bg: BasisGraph,
}

impl UniformMatroid {
    pub fn new(spec: UniformSpec) -> Self {
        UniformMatroid {
            spec,
            bg: BasisGraph::build(uniform_bases(spec)),
        }
    }

    pub fn spec(&self) -> UniformSpec {
        self.spec
    }

    pub fn basis_graph(&self) -> &BasisGraph {
        &self.bg
    }

    pub fn good_cycles(&self, b1: usize, b2: usize) -> Result<Vec<GoodCycle>> {
        good_cycles_uniform(self.spec, &self.bg, b1, b2)
    }
}
