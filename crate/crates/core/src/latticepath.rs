//! Lattice path matroids `M[P,Q]` and generalized Catalan matroids `M[Q]`.
//!
//! Elements are step positions `0..m+r`; the paper-style 1-based position `j`
//! is element `j - 1`. A basis is the set of positions of the N steps of one
//! path that stays between `P` (below) and `Q` (above).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matroid::{dedup_good_cycles, Basis, BasisFamily, BasisGraph, Element, GoodCycle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

impl Step {
    pub fn swap(self) -> Step {
        match self {
            Step::N => Step::E,
            Step::E => Step::N,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepWord(Vec<Step>);

impl StepWord {
    pub fn new(steps: Vec<Step>) -> Self {
        StepWord(steps)
    }

    /// The word whose N steps are exactly `set`.
    pub fn from_subset(len: usize, set: &Basis) -> Self {
        StepWord((0..len).map(|j| if set.contains(j) { Step::N } else { Step::E }).collect())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, s: Step) -> usize {
        self.0.iter().filter(|&&x| x == s).count()
    }

    pub fn positions(&self, s: Step) -> Vec<usize> {
        (0..self.0.len()).filter(|&j| self.0[j] == s).collect()
    }

    pub fn to_subset(&self) -> Basis {
        Basis::new(self.positions(Step::N)).expect("positions are distinct")
    }

    /// Number of N steps among the first `t` steps.
    fn height(&self, t: usize) -> usize {
        self.0[..t].iter().filter(|&&x| x == Step::N).count()
    }

    fn reversed_swapped(&self) -> StepWord {
        StepWord(self.0.iter().rev().map(|s| s.swap()).collect())
    }

    fn remove(&self, j: usize) -> StepWord {
        let mut v = self.0.clone();
        v.remove(j);
        StepWord(v)
    }

    fn repeat(s: Step, k: usize) -> StepWord {
        StepWord(vec![s; k])
    }

    fn concat(&self, other: &StepWord) -> StepWord {
        StepWord(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Step::N => "N",
                Step::E => "E",
            })?;
        }
        Ok(())
    }
}

impl FromStr for StepWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                _ => Err(Error::BadWord(format!("`{c}` in `{s}`; use only N and E"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(StepWord)
    }
}

/// Map from the elements of a minor back to the parent's elements.
pub type ElementMap = Vec<Element>;

/// `M[P,Q]` with `P` the lower and `Q` the upper bounding path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePathMatroid {
    p: StepWord,
    q: StepWord,
}

impl LatticePathMatroid {
    pub fn new(p: StepWord, q: StepWord) -> Result<Self> {
        if p.len() != q.len() {
            return Err(Error::BadWord(format!("P has {} steps but Q has {}", p.len(), q.len())));
        }
        if p.count(Step::N) != q.count(Step::N) {
            return Err(Error::BadWord("P and Q must end at the same point".into()));
        }
        if (0..=p.len()).any(|t| p.height(t) > q.height(t)) {
            return Err(Error::PAboveQ);
        }
        Ok(LatticePathMatroid { p, q })
    }

    pub fn p(&self) -> &StepWord {
        &self.p
    }

    pub fn q(&self) -> &StepWord {
        &self.q
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.q.count(Step::N)
    }

    pub fn corank(&self) -> usize {
        self.q.count(Step::E)
    }

    /// The intervals `A_i = [a_i, b_i]` (inclusive, 0-based).
    pub fn standard_presentation(&self) -> Vec<(usize, usize)> {
        self.q
            .positions(Step::N)
            .into_iter()
            .zip(self.p.positions(Step::N))
            .collect()
    }

    /// Bases as N-position sets of every admissible path.
    pub fn enumerate_bases(&self) -> BasisFamily {
        let n = self.len();
        let lo: Vec<usize> = (0..=n).map(|t| self.p.height(t)).collect();
        let hi: Vec<usize> = (0..=n).map(|t| self.q.height(t)).collect();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(t: usize, h: usize, lo: &[usize], hi: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Basis>) {
            if t + 1 == lo.len() {
                out.push(Basis::from_sorted_unchecked(cur.clone()));
                return;
            }
            if h < hi[t + 1] {
                cur.push(t);
                go(t + 1, h + 1, lo, hi, cur, out);
                cur.pop();
            }
            if h >= lo[t + 1] {
                go(t + 1, h, lo, hi, cur, out);
            }
        }
        go(0, 0, &lo, &hi, &mut cur, &mut out);
        BasisFamily::new(n.max(1), self.rank(), out).expect("P itself is an admissible path")
    }

    /// Number of admissible paths, and for each position the number of those
    /// paths with an N there.
    pub fn path_counts(&self) -> (u128, Vec<u128>) {
        let n = self.len();
        let lo: Vec<usize> = (0..=n).map(|t| self.p.height(t)).collect();
        let hi: Vec<usize> = (0..=n).map(|t| self.q.height(t)).collect();
        let r = self.rank();
        let mut fwd = vec![vec![0u128; r + 1]; n + 1];
        fwd[0][0] = 1;
        for t in 0..n {
            for h in lo[t]..=hi[t] {
                let c = fwd[t][h];
                if c == 0 {
                    continue;
                }
                if h < hi[t + 1] {
                    fwd[t + 1][h + 1] += c;
                }
                if h >= lo[t + 1] {
                    fwd[t + 1][h] += c;
                }
            }
        }
        let mut bwd = vec![vec![0u128; r + 1]; n + 1];
        bwd[n][r] = 1;
        for t in (0..n).rev() {
            for h in lo[t]..=hi[t] {
                let mut c = 0;
                if h < hi[t + 1] {
                    c += bwd[t + 1][h + 1];
                }
                if h >= lo[t + 1] {
                    c += bwd[t + 1][h];
                }
                bwd[t][h] = c;
            }
        }
        let with_n = (0..n)
            .map(|t| (0..r).map(|h| fwd[t][h] * bwd[t + 1][h + 1]).sum())
            .collect();
        (fwd[n][r], with_n)
    }

    pub fn loops(&self) -> Vec<Element> {
        let (_, with_n) = self.path_counts();
        (0..self.len()).filter(|&j| with_n[j] == 0).collect()
    }

    pub fn isthmuses(&self) -> Vec<Element> {
        let (total, with_n) = self.path_counts();
        (0..self.len()).filter(|&j| with_n[j] == total).collect()
    }

    fn check_element(&self, e: Element) -> Result<()> {
        if e >= self.len() {
            return Err(Error::ElementOutOfRange {
                element: e,
                ground_size: self.len(),
            });
        }
        Ok(())
    }

    fn survivors(&self, e: Element) -> ElementMap {
        (0..self.len()).filter(|&j| j != e).collect()
    }

    fn delete_raw(&self, e: Element) -> Result<LatticePathMatroid> {
        let q = self.q.steps();
        let p = self.p.steps();
        let qj = (e..q.len()).find(|&j| q[j] == Step::E);
        let pj = (0..=e).rev().find(|&j| p[j] == Step::E);
        match (qj, pj) {
            (Some(qj), Some(pj)) => LatticePathMatroid::new(self.p.remove(pj), self.q.remove(qj)),
            _ => Err(Error::LoopOrIsthmus(e)),
        }
    }

    fn contract_raw(&self, e: Element) -> Result<LatticePathMatroid> {
        let q = self.q.steps();
        let p = self.p.steps();
        let qj = (0..=e).rev().find(|&j| q[j] == Step::N);
        let pj = (e..p.len()).find(|&j| p[j] == Step::N);
        match (qj, pj) {
            (Some(qj), Some(pj)) => LatticePathMatroid::new(self.p.remove(pj), self.q.remove(qj)),
            _ => Err(Error::LoopOrIsthmus(e)),
        }
    }

    /// `M \ e` by the path rule; returns the minor and its element map.
    pub fn delete_element(&self, e: Element) -> Result<(LatticePathMatroid, ElementMap)> {
        self.check_element(e)?;
        if self.loops().contains(&e) || self.isthmuses().contains(&e) {
            return Err(Error::LoopOrIsthmus(e));
        }
        Ok((self.delete_raw(e)?, self.survivors(e)))
    }

    /// `M / e` by the path rule; returns the minor and its element map.
    pub fn contract_element(&self, e: Element) -> Result<(LatticePathMatroid, ElementMap)> {
        self.check_element(e)?;
        if self.loops().contains(&e) || self.isthmuses().contains(&e) {
            return Err(Error::LoopOrIsthmus(e));
        }
        Ok((self.contract_raw(e)?, self.survivors(e)))
    }

    /// Deletes every loop and contracts every isthmus. The basis graph is
    /// unchanged; the returned map sends minor elements to `self`'s and the
    /// isthmus list is what every parent basis contains beyond the lift.
    pub fn simplify(&self) -> (LatticePathMatroid, ElementMap, Vec<Element>) {
        let mut cur = self.clone();
        let mut map: ElementMap = (0..self.len()).collect();
        let mut isthmuses = Vec::new();
        loop {
            if let Some(&j) = cur.loops().first() {
                cur = cur.delete_raw(j).expect("a loop is an E step of both paths");
                map.remove(j);
                continue;
            }
            if let Some(&j) = cur.isthmuses().first() {
                cur = cur.contract_raw(j).expect("an isthmus is an N step of both paths");
                isthmuses.push(map.remove(j));
                continue;
            }
            break;
        }
        isthmuses.sort_unstable();
        (cur, map, isthmuses)
    }

    /// The dual, written again as a lattice path matroid: steps are reversed
    /// and swapped, so element `j` becomes `len - 1 - j`.
    pub fn dual(&self) -> LatticePathMatroid {
        LatticePathMatroid::new(self.p.reversed_swapped(), self.q.reversed_swapped())
            .expect("reflection preserves the bounding order")
    }

    /// Maps a basis to the corresponding basis of [`Self::dual`].
    pub fn dual_basis(&self, b: &Basis) -> Basis {
        let n = self.len();
        Basis::new((0..n).filter(|&j| !b.contains(j)).map(|j| n - 1 - j).collect())
            .expect("distinct positions")
    }

    pub fn is_generalized_catalan(&self) -> bool {
        let (m, r) = (self.corank(), self.rank());
        self.p == StepWord::repeat(Step::E, m).concat(&StepWord::repeat(Step::N, r))
    }
}

/// `M[Q]`: the lattice path matroid with lower path `E^m N^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenCatalan {
    q: StepWord,
}

impl GenCatalan {
    pub fn new(q: StepWord) -> Self {
        GenCatalan { q }
    }

    /// The `k`-Catalan matroid, `Q = (NE)^k`.
    pub fn catalan(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadParams("k-Catalan needs k >= 1".into()));
        }
        Ok(GenCatalan::new(StepWord((0..k).flat_map(|_| [Step::N, Step::E]).collect())))
    }

    /// `U_{r,n}` as `M[N^r E^{n-r}]`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::BadParams(format!("uniform needs r <= n, got r={r}, n={n}")));
        }
        Ok(GenCatalan::new(StepWord::repeat(Step::N, r).concat(&StepWord::repeat(Step::E, n - r))))
    }

    pub fn q(&self) -> &StepWord {
        &self.q
    }

    pub fn rank(&self) -> usize {
        self.q.count(Step::N)
    }

    pub fn corank(&self) -> usize {
        self.q.count(Step::E)
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    pub fn lpm(&self) -> LatticePathMatroid {
        let p = StepWord::repeat(Step::E, self.corank()).concat(&StepWord::repeat(Step::N, self.rank()));
        LatticePathMatroid::new(p, self.q.clone()).expect("E^m N^r is the lowest path")
    }

    pub fn from_lpm(m: &LatticePathMatroid) -> Result<Self> {
        if !m.is_generalized_catalan() {
            return Err(Error::BadWord(format!("lower path {} is not E^m N^r", m.p)));
        }
        Ok(GenCatalan::new(m.q.clone()))
    }

    pub fn bases(&self) -> BasisFamily {
        self.lpm().enumerate_bases()
    }

    /// Loop-free and isthmus-free iff `Q` starts with N and ends with E.
    pub fn is_simple_form(&self) -> bool {
        let s = self.q.steps();
        s.first() == Some(&Step::N) && s.last() == Some(&Step::E)
    }

    pub fn dualize(&self) -> GenCatalan {
        GenCatalan::new(self.q.reversed_swapped())
    }

    pub fn delete_element(&self, e: Element) -> Result<(GenCatalan, ElementMap)> {
        let (m, map) = self.lpm().delete_element(e)?;
        Ok((GenCatalan::from_lpm(&m)?, map))
    }

    pub fn contract_element(&self, e: Element) -> Result<(GenCatalan, ElementMap)> {
        let (m, map) = self.lpm().contract_element(e)?;
        Ok((GenCatalan::from_lpm(&m)?, map))
    }

    pub fn simplify(&self) -> (GenCatalan, ElementMap, Vec<Element>) {
        let (m, map, isth) = self.lpm().simplify();
        (GenCatalan::from_lpm(&m).expect("minor-closed class"), map, isth)
    }
}

impl FromStr for GenCatalan {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(GenCatalan::new(s.parse()?))
    }
}

impl fmt::Display for GenCatalan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M[{}]", self.q)
    }
}

/// Orients `b1 b2` so that the element leaving `B1` precedes the one entering.
fn orient(bg: &BasisGraph, b1: usize, b2: usize) -> Result<(usize, usize, Element, Element)> {
    let (e, g) = bg.exchange(b1, b2)?;
    Ok(if e < g { (b1, b2, e, g) } else { (b2, b1, g, e) })
}

/// Good cycles through the edge `b1 b2` from the three-case construction,
/// for `m >= r >= 2` and no loop or isthmus. The edge is first oriented so
/// that the element leaving the first basis has the smaller position; the
/// returned cycles carry that orientation.
pub fn good_cycles_catalan(m: &GenCatalan, bg: &BasisGraph, b1: usize, b2: usize) -> Result<Vec<GoodCycle>> {
    let (r, co) = (m.rank(), m.corank());
    if !(co >= r && r >= 2) {
        return Err(Error::BadParams(format!("needs m >= r >= 2, got m={co}, r={r}")));
    }
    if !m.is_simple_form() {
        return Err(Error::BadParams(format!("{m} has a loop or an isthmus")));
    }
    let (b1, b2, e, g) = orient(bg, b1, b2)?;
    let fam = bg.family();
    let (x, y) = (fam.basis(b1), fam.basis(b2));
    let len = m.len();
    let common_n: Vec<usize> = (0..len).filter(|&j| x.contains(j) && y.contains(j)).collect();
    let common_e: Vec<usize> = (0..len).filter(|&j| !x.contains(j) && !y.contains(j)).collect();
    let mut out = Vec::new();
    let push = |out: &mut Vec<GoodCycle>, b3: Basis, b4: Basis| -> Result<()> {
        out.push(GoodCycle::from_bases(bg, b1, b2, &b3, &b4)?);
        Ok(())
    };
    let case1 = common_n.iter().any(|&j| j < e);
    let case2 = common_e.iter().any(|&j| j > g);
    if case1 {
        let f = common_n[0];
        for &w in &common_e {
            push(&mut out, y.exchange(f, w), x.exchange(f, w))?;
        }
    }
    if case2 {
        let w = *common_e.last().expect("case 2 has a common E");
        for &f in &common_n {
            push(&mut out, y.exchange(f, w), x.exchange(f, w))?;
        }
    }
    if !case1 && !case2 {
        let es: Vec<usize> = (0..len).filter(|&j| !x.contains(j)).collect();
        let h = match es.len() {
            k if k >= 2 => es[k - 2],
            _ => return Err(Error::InvalidTemplate("B1 has no penultimate E".into())),
        };
        for &f in &common_n {
            match (f + 1..len).find(|&j| !x.contains(j)) {
                // Type I block: the block ends at a common E before g
                Some(w) if w < g => push(&mut out, y.exchange(f, w), x.exchange(f, w))?,
                // Type II (block ends at g) and Type III (block after g)
                _ => push(&mut out, y.exchange(f, h), x.exchange(f, g))?,
            }
        }
    }
    Ok(dedup_good_cycles(out))
}

/// Good cycles for any loop- and isthmus-free `M[Q]` with `r, m >= 2`,
/// going through the dual when `m < r`. Returns no cycles when `r` or `m`
/// is 1, where the basis graph is complete and has none.
pub fn good_cycles_gencat_min(m: &GenCatalan, bg: &BasisGraph, b1: usize, b2: usize) -> Result<Vec<GoodCycle>> {
    bg.exchange(b1, b2)?;
    if m.rank() < 2 || m.corank() < 2 {
        return Ok(Vec::new());
    }
    if m.corank() >= m.rank() {
        return good_cycles_catalan(m, bg, b1, b2);
    }
    let lpm = m.lpm();
    let dual = m.dualize();
    let dbg = BasisGraph::build(dual.bases());
    let fam = bg.family();
    let to_dual = |v: usize| {
        dbg.family()
            .index_of(&lpm.dual_basis(fam.basis(v)))
            .expect("dual basis exists")
    };
    let back = |d: usize| {
        // the dual of the dual relabeling is its own inverse
        let db = dual.lpm().dual_basis(dbg.family().basis(d));
        fam.index_of(&db).expect("primal basis exists")
    };
    let mut out = Vec::new();
    for c in good_cycles_catalan(&dual, &dbg, to_dual(b1), to_dual(b2))? {
        // complements flip the e-pattern, so the primal cycle starts at the
        // image of the dual's second vertex
        let (p1, p2, p3, p4) = (back(c.b2), back(c.b1), back(c.b4), back(c.b3));
        out.push(GoodCycle::from_bases(bg, p1, p2, fam.basis(p3), fam.basis(p4))?);
    }
    Ok(dedup_good_cycles(out))
}

/// A generalized Catalan matroid with its basis graph.
#[derive(Clone, Debug)]
pub struct CatalanMatroid {
    gc: GenCatalan,
    bg: BasisGraph,
}

impl CatalanMatroid {
    pub fn new(gc: GenCatalan) -> Self {
        let bg = BasisGraph::build(gc.bases());
        CatalanMatroid { gc, bg }
    }

    pub fn gen_catalan(&self) -> &GenCatalan {
        &self.gc
    }

    pub fn basis_graph(&self) -> &BasisGraph {
        &self.bg
    }

    pub fn good_cycles(&self, b1: usize, b2: usize) -> Result<Vec<GoodCycle>> {
        good_cycles_gencat_min(&self.gc, &self.bg, b1, b2)
    }
}

/// Whether some single deletion or contraction of `m` has exactly the basis
/// family of `target` after relabeling.
pub fn has_one_step_minor(m: &GenCatalan, target: &BasisFamily) -> bool {
    (0..m.len()).any(|x| {
        // loops may be deleted and isthmuses contracted here
        let lpm = m.lpm();
        [lpm.delete_raw(x), lpm.contract_raw(x)]
            .into_iter()
            .flatten()
            .any(|minor| minor.enumerate_bases() == *target)
    })
}

/// Whether both `M \ e` and `M / e` of the `k`-Catalan matroid have the
/// `(k-1)`-Catalan matroid as a minor. For `k >= 2` each direct minor is one
/// step away from it.
pub fn cat_minor_holds(k: usize, e: Element) -> Result<bool> {
    let m = GenCatalan::catalan(k)?;
    let target = if k == 1 {
        return Ok(true);
    } else {
        GenCatalan::catalan(k - 1)?.bases()
    };
    let (del, _) = m.delete_element(e)?;
    let (con, _) = m.contract_element(e)?;
    let ok = |x: &GenCatalan| x.bases() == target || has_one_step_minor(x, &target);
    Ok(ok(&del) && ok(&con))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{good_cycles_bruteforce, split_by_element};
    use crate::oracle;

    fn lists(f: &BasisFamily) -> Vec<Vec<usize>> {
        f.bases().iter().map(|b| b.elements().to_vec()).collect()
    }

    #[test]
    fn catalan_presentation() {
        let m = GenCatalan::catalan(2).unwrap().lpm();
        // 1-based [1,3], [3,4]
        assert_eq!(m.standard_presentation(), vec![(0, 2), (2, 3)]);
        let m4 = GenCatalan::catalan(4).unwrap().lpm();
        for (i, (a, b)) in m4.standard_presentation().into_iter().enumerate() {
            let i1 = i + 1;
            assert_eq!((a + 1, b + 1), (2 * i1 - 1, 4 + i1));
        }
    }

    #[test]
    fn catalan_bases() {
        assert_eq!(lists(&GenCatalan::catalan(1).unwrap().bases()), vec![vec![0], vec![1]]);
        assert_eq!(
            lists(&GenCatalan::catalan(2).unwrap().bases()),
            vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        let counts: Vec<usize> = (1..=6).map(|k| GenCatalan::catalan(k).unwrap().bases().len()).collect();
        assert_eq!(counts, vec![2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn bases_match_transversal_oracle() {
        for q in ["NENE", "NNEE", "NENNEE", "NNENEE", "NNNEEE"] {
            let m: GenCatalan = q.parse().unwrap();
            let lpm = m.lpm();
            let sets: Vec<Vec<usize>> = lpm.standard_presentation().iter().map(|&(a, b)| (a..=b).collect()).collect();
            let oracle = oracle::transversal_family(lpm.len(), &sets).unwrap();
            assert_eq!(lpm.enumerate_bases(), oracle, "{q}");
        }
    }

    #[test]
    fn uniform_encoding() {
        let f = GenCatalan::uniform(2, 5).unwrap().bases();
        assert_eq!(f.len(), 10);
        assert_eq!(GenCatalan::uniform(2, 5).unwrap().dualize().bases().len(), 10);
        assert_eq!(GenCatalan::uniform(2, 5).unwrap().dualize().rank(), 3);
    }

    #[test]
    fn bad_words() {
        assert!(matches!("NXE".parse::<StepWord>(), Err(Error::BadWord(_))));
        let hi: StepWord = "ENNE".parse().unwrap();
        let lo: StepWord = "NENE".parse().unwrap();
        assert_eq!(LatticePathMatroid::new(lo, hi).unwrap_err(), Error::PAboveQ);
    }

    #[test]
    fn path_rules_match_split() {
        for q in ["NENE", "NENENE", "NNEE", "NNENEE", "NENNEE", "NNEENE"] {
            let m: GenCatalan = q.parse().unwrap();
            let fam = m.bases();
            for e in 0..m.len() {
                let split = split_by_element(&fam, e).unwrap();
                let (d, dmap) = m.delete_element(e).unwrap();
                let (c, cmap) = m.contract_element(e).unwrap();
                assert_eq!(d.bases().relabel(fam.ground_size(), |j| dmap[j]).unwrap(), split.delete, "delete {e} of {q}");
                assert_eq!(c.bases().relabel(fam.ground_size(), |j| cmap[j]).unwrap(), split.contract, "contract {e} of {q}");
            }
        }
    }

    #[test]
    fn two_catalan_delete_first() {
        let (d, _) = GenCatalan::catalan(2).unwrap().delete_element(0).unwrap();
        assert_eq!(d.q().to_string(), "NNE");
        assert_eq!(d.lpm().p().to_string(), "ENN");
        assert_eq!(d.bases().len(), 3);
    }

    #[test]
    fn simplify_strips() {
        let m: GenCatalan = "ENNEEN".parse().unwrap();
        let lpm = m.lpm();
        assert_eq!(lpm.loops(), vec![0]);
        assert_eq!(lpm.isthmuses(), vec![5]);
        let (s, map, isth) = m.simplify();
        assert!(s.is_simple_form());
        assert_eq!(isth, vec![5]);
        let lifted = s
            .bases()
            .relabel(m.len(), |j| map[j])
            .unwrap();
        let back: Vec<Basis> = lifted.bases().iter().map(|b| b.with(5)).collect();
        assert_eq!(BasisFamily::new(m.len(), m.rank(), back).unwrap(), m.bases());
    }

    #[test]
    fn dual_involution() {
        for q in ["NENE", "NNENEE", "NNNEE", "NENNE"] {
            let m: GenCatalan = q.parse().unwrap();
            assert_eq!(m.dualize().dualize(), m);
            let lpm = m.lpm();
            let comp: Vec<Basis> = m.bases().bases().iter().map(|b| lpm.dual_basis(b)).collect();
            assert_eq!(BasisFamily::new(m.len(), m.corank(), comp).unwrap(), m.dualize().bases());
        }
        let k3 = GenCatalan::catalan(3).unwrap();
        assert_eq!(k3.dualize(), k3);
    }

    #[test]
    fn catalan_templates_sound() {
        for k in 2..=3 {
            let cm = CatalanMatroid::new(GenCatalan::catalan(k).unwrap());
            let bg = cm.basis_graph();
            for (u, v) in bg.edges() {
                let cyc = cm.good_cycles(u, v).unwrap();
                assert!(cyc.len() >= k - 1);
                let brute = good_cycles_bruteforce(bg, cyc[0].b1, cyc[0].b2).unwrap();
                assert!(cyc.iter().all(|c| brute.contains(c)));
            }
        }
    }

    #[test]
    fn corollary_through_dual() {
        // r = 3, m = 2
        let cm = CatalanMatroid::new("NNENE".parse().unwrap());
        let bg = cm.basis_graph();
        for (u, v) in bg.edges() {
            let cyc = cm.good_cycles(u, v).unwrap();
            assert!(!cyc.is_empty());
            for c in &cyc {
                c.validate(bg).unwrap();
            }
        }
    }

    #[test]
    fn cat_minor_observation() {
        for k in 2..=4 {
            for e in 0..2 * k {
                assert!(cat_minor_holds(k, e).unwrap(), "k={k} e={e}");
            }
        }
    }
}
