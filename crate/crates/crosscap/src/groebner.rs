//! Reduced Gröbner bases over the rationals and zero-dimensional
//! quotient algebras.
//!
//! Buchberger's algorithm with the Gebauer-Möller pair criteria and the
//! normal selection strategy (lowest degrevlex lcm first, sugar degree as
//! tiebreak). Internally the basis lives over the integers: reductions are
//! fraction-free and the content is stripped after each one, which keeps
//! coefficient growth in check on minor ideals with dozens of generators.

use crate::monomial::Monomial;
use crate::polynomial::{Polynomial, Variables};
use crate::rational::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("quotient algebra is infinite-dimensional: no pure power of `{variable}` leads the ideal")]
    InfiniteDimension { variable: String },
}

/// A reduced Gröbner basis under degrevlex: monic, inter-reduced, sorted by
/// leading monomial. Canonical for the (ideal, order) pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    vars: Variables,
    generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn variables(&self) -> &Variables {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// True iff the basis is `{1}`.
    pub fn is_unit_ideal(&self) -> bool {
        self.generators.len() == 1 && self.generators[0] == Polynomial::one(&self.vars)
    }

    /// True iff the ideal is the zero ideal (empty basis).
    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Complete reduction of `p` modulo the basis: no term of the result is
    /// divisible by any leading term. Linear in `p` and idempotent.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.variables(), &self.vars, "incompatible variable lists");
        let leads: Vec<&Monomial> = self
            .generators
            .iter()
            .map(|g| g.leading_term().expect("basis elements are nonzero").0)
            .collect();
        let mut work = p.clone();
        // cursor over terms in descending order; a reduction step cancels the
        // term under the cursor and only introduces strictly smaller ones
        let mut pos = 0;
        'outer: while pos < work.num_terms() {
            let (m, c) = {
                let (m, c) = &work.terms()[pos];
                (m.clone(), c.clone())
            };
            for (gi, lead) in leads.iter().enumerate() {
                if lead.divides(&m) {
                    let t = m.div(lead).unwrap();
                    // generators are monic
                    work = work.add_scaled_shifted(&self.generators[gi], &-&c, &t);
                    continue 'outer;
                }
            }
            pos += 1;
        }
        work
    }

    /// Staircase basis of the quotient algebra, when finite.
    pub fn quotient_basis(&self) -> Result<QuotientAlgebra, GroebnerError> {
        QuotientAlgebra::new(self.clone())
    }
}

/// The quotient algebra `k[x]/I` presented by a staircase monomial basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientAlgebra {
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl QuotientAlgebra {
    fn new(gb: GroebnerBasis) -> Result<Self, GroebnerError> {
        let nvars = gb.vars.len();
        if gb.is_unit_ideal() {
            return Ok(QuotientAlgebra {
                gb,
                basis: Vec::new(),
                index: HashMap::new(),
            });
        }
        let leads: Vec<Monomial> = gb
            .generators
            .iter()
            .map(|g| g.leading_term().unwrap().0.clone())
            .collect();
        // finite dimension iff every variable has a pure power among the
        // leading terms
        let mut bounds = vec![0u32; nvars];
        for v in 0..nvars {
            let bound = leads
                .iter()
                .filter(|m| m.exps().iter().enumerate().all(|(i, &e)| i == v || e == 0))
                .map(|m| m.exp(v))
                .min();
            match bound {
                Some(b) => bounds[v] = b,
                None => {
                    return Err(GroebnerError::InfiniteDimension {
                        variable: gb.vars.name(v).to_string(),
                    })
                }
            }
        }
        let mut basis = Vec::new();
        let mut exps = vec![0u32; nvars];
        enumerate_staircase(0, &mut exps, &bounds, &leads, &mut basis);
        basis.sort();
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(QuotientAlgebra { gb, basis, index })
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn variables(&self) -> &Variables {
        &self.gb.vars
    }

    /// Standard monomials in ascending degrevlex order; `basis()[0]` is `1`
    /// whenever the algebra is nontrivial.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the residue class of `p` in the staircase basis.
    pub fn coordinates(&self, p: &Polynomial) -> Vec<Rat> {
        let nf = self.gb.normal_form(p);
        let mut coords = vec![Rat::zero(); self.basis.len()];
        for (m, c) in nf.terms() {
            let i = *self
                .index
                .get(m)
                .expect("normal form lives in the staircase");
            coords[i] = c.clone();
        }
        coords
    }
}

fn enumerate_staircase(
    var: usize,
    exps: &mut Vec<u32>,
    bounds: &[u32],
    leads: &[Monomial],
    out: &mut Vec<Monomial>,
) {
    if var == bounds.len() {
        let m = Monomial::from_exps(exps);
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        return;
    }
    for e in 0..bounds[var] {
        exps[var] = e;
        enumerate_staircase(var + 1, exps, bounds, leads, out);
    }
    exps[var] = 0;
}

// ---------------------------------------------------------------------------
// Buchberger over the integers
// ---------------------------------------------------------------------------

/// Integer polynomial, terms descending, content-free with positive lead.
#[derive(Clone, Debug)]
struct IPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl IPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> (&Monomial, &BigInt) {
        let (m, c) = &self.terms[0];
        (m, c)
    }

    fn from_rational(p: &Polynomial) -> IPoly {
        if p.is_zero() {
            return IPoly { terms: Vec::new() };
        }
        let mut denom_lcm = BigInt::one();
        for (_, c) in p.terms() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .iter()
            .map(|(m, c)| (m.clone(), c.numer() * (&denom_lcm / c.denom())))
            .collect();
        IPoly { terms }.normalized()
    }

    fn to_monic_rational(&self, vars: &Variables) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero(vars);
        }
        let lc = self.terms[0].1.clone();
        Polynomial::from_terms(
            vars,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), Rat::new(c.clone(), lc.clone()))),
        )
    }

    /// Divides out the integer content and makes the leading coefficient
    /// positive.
    fn normalized(mut self) -> IPoly {
        if self.terms.is_empty() {
            return self;
        }
        let mut content = BigInt::zero();
        for (_, c) in &self.terms {
            content = content.gcd(c);
            if content.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        if !content.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &content;
            }
        }
        self
    }

    /// `a * self - b * shift * other`, merged in one pass.
    fn combine(&self, a: &BigInt, other: &IPoly, b: &BigInt, shift: &Monomial) -> IPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let ms = &self.terms[i].0;
            let mo = other.terms[j].0.mul(shift);
            match ms.cmp(&mo) {
                Ordering::Greater => {
                    out.push((ms.clone(), a * &self.terms[i].1));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mo, -(b * &other.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a * &self.terms[i].1 - b * &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((mo, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for (m, c) in &self.terms[i..] {
            out.push((m.clone(), a * c));
        }
        for (m, c) in &other.terms[j..] {
            out.push((m.mul(shift), -(b * c)));
        }
        IPoly { terms: out }
    }

    fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }
}

/// One fraction-free cancellation of the term at `pos` by reducer `gi`.
fn reduce_step(p: IPoly, pos: usize, basis: &[IPoly], gi: usize) -> IPoly {
    let g = &basis[gi];
    let (lm, lc) = g.lead();
    let m = &p.terms[pos].0;
    let t = m.div(lm).expect("caller checked divisibility");
    let c = p.terms[pos].1.clone();
    let gcd = c.gcd(lc);
    let a = lc / &gcd;
    let b = &c / &gcd;
    // a > 0 because basis leads are positive
    p.combine(&a, g, &b, &t)
}

fn find_reducer(m: &Monomial, basis: &[IPoly], active: &[usize]) -> Option<usize> {
    active
        .iter()
        .copied()
        .find(|&gi| basis[gi].lead().0.divides(m))
}

/// Cap on coefficient growth between content extractions.
const NORMALIZE_BITS: u64 = 2048;

/// Cancels the leading term while it stays divisible; the tail is left
/// alone, which keeps the step count per S-polynomial small and the
/// fraction-free coefficient growth in check.
fn reduce_head(mut p: IPoly, basis: &[IPoly], active: &[usize]) -> IPoly {
    let mut steps = 0usize;
    while !p.is_zero() {
        let Some(gi) = find_reducer(&p.terms[0].0.clone(), basis, active) else {
            break;
        };
        p = reduce_step(p, 0, basis, gi);
        steps += 1;
        if steps % 8 == 0 || p.terms.first().map_or(false, |(_, c)| c.bits() > NORMALIZE_BITS)
        {
            p = p.normalized();
        }
    }
    p.normalized()
}

/// Full normal form: every term irreducible at the end.
fn reduce_full(mut p: IPoly, basis: &[IPoly], active: &[usize]) -> IPoly {
    let mut pos = 0;
    let mut steps = 0usize;
    while pos < p.terms.len() {
        let m = p.terms[pos].0.clone();
        match find_reducer(&m, basis, active) {
            None => pos += 1,
            Some(gi) => {
                p = reduce_step(p, pos, basis, gi);
                steps += 1;
                if steps % 8 == 0
                    || p
                        .terms
                        .get(pos)
                        .map_or(false, |(_, c)| c.bits() > NORMALIZE_BITS)
                {
                    p = p.normalized();
                }
            }
        }
    }
    p.normalized()
}

#[derive(Clone, PartialEq, Eq)]
struct Pair {
    lcm: Monomial,
    sugar: u32,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        // BinaryHeap is a max-heap; reverse so the smallest lcm pops first
        other
            .lcm
            .cmp(&self.lcm)
            .then_with(|| other.sugar.cmp(&self.sugar))
            .then_with(|| other.i.cmp(&self.i))
            .then_with(|| other.j.cmp(&self.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Buchberger {
    polys: Vec<IPoly>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: BinaryHeap<Pair>,
    dropped: std::collections::HashSet<(usize, usize)>,
}

impl Buchberger {
    fn new() -> Self {
        Buchberger {
            polys: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            pairs: BinaryHeap::new(),
            dropped: std::collections::HashSet::new(),
        }
    }

    /// Gebauer-Möller update: forms the new pairs for `h`, prunes old ones,
    /// and retires active elements whose lead is now divisible.
    fn update(&mut self, h: usize) {
        let lead_h = self.polys[h].lead().0.clone();

        // candidate new pairs, sorted by lcm ascending so divisors come first
        let mut cand: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let lg = self.polys[g].lead().0;
                (g, lead_h.lcm(lg), lead_h.coprime(lg))
            })
            .collect();
        cand.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));

        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        'cand: for (g, lcm, cop) in cand {
            if !cop {
                for (_, kl, _) in &kept {
                    if kl.divides(&lcm) {
                        continue 'cand;
                    }
                }
            }
            kept.push((g, lcm, cop));
        }

        // prune old pairs whose lcm the new lead strictly covers
        let old: Vec<Pair> = self.pairs.iter().cloned().collect();
        for p in old {
            if self.dropped.contains(&(p.i, p.j)) {
                continue;
            }
            let li = self.polys[p.i].lead().0;
            let lj = self.polys[p.j].lead().0;
            if lead_h.divides(&p.lcm) && lead_h.lcm(li) != p.lcm && lead_h.lcm(lj) != p.lcm {
                self.dropped.insert((p.i, p.j));
            }
        }

        // product criterion: coprime pairs never enter the queue
        for (g, lcm, cop) in kept {
            if cop {
                continue;
            }
            let sugar = (self.sugar[g] + lcm.degree() - self.polys[g].lead().0.degree()).max(
                self.sugar[h] + lcm.degree() - self.polys[h].lead().0.degree(),
            );
            let (i, j) = (g.min(h), g.max(h));
            self.pairs.push(Pair { lcm, sugar, i, j });
        }

        self.active.retain(|&g| {
            let lg = self.polys[g].lead().0;
            !lead_h.divides(lg)
        });
        self.active.push(h);
    }

    fn insert(&mut self, p: IPoly, sugar: u32) {
        let idx = self.polys.len();
        self.polys.push(p);
        self.sugar.push(sugar);
        self.update(idx);
    }

    fn run(&mut self) {
        let trace = std::env::var_os("CROSSCAP_GB_TRACE").is_some();
        let mut processed = 0usize;
        while let Some(pair) = self.pairs.pop() {
            if self.dropped.contains(&(pair.i, pair.j)) {
                continue;
            }
            processed += 1;
            if trace && processed % 5 == 0 {
                let max_bits = self
                    .active
                    .iter()
                    .flat_map(|&i| self.polys[i].terms.iter())
                    .map(|(_, c)| c.bits())
                    .max()
                    .unwrap_or(0);
                let max_terms = self
                    .active
                    .iter()
                    .map(|&i| self.polys[i].terms.len())
                    .max()
                    .unwrap_or(0);
                eprintln!(
                    "gb trace: {} pairs done, {} queued, {} active, max {} bits, max {} terms, lcm deg {}",
                    processed,
                    self.pairs.len(),
                    self.active.len(),
                    max_bits,
                    max_terms,
                    pair.lcm.degree()
                );
            }
            let f = &self.polys[pair.i];
            let g = &self.polys[pair.j];
            let (lf, cf) = f.lead();
            let (lg, cg) = g.lead();
            let tf = pair.lcm.div(lf).unwrap();
            let tg = pair.lcm.div(lg).unwrap();
            let gcd = cf.gcd(cg);
            // (cg/gcd) * tf * f - (cf/gcd) * tg * g
            let a = cg / &gcd;
            let b = cf / &gcd;
            let shifted_f = IPoly {
                terms: f
                    .terms
                    .iter()
                    .map(|(m, c)| (m.mul(&tf), &a * c))
                    .collect(),
            };
            let spoly = shifted_f.combine(&BigInt::one(), g, &b, &tg);
            let reduced = reduce_head(spoly, &self.polys, &self.active);
            if reduced.is_zero() {
                continue;
            }
            let sugar = pair.sugar.max(reduced.total_degree());
            if reduced.lead().0.is_one() {
                // unit ideal: short-circuit
                self.polys.clear();
                self.sugar.clear();
                self.active.clear();
                self.pairs.clear();
                self.dropped.clear();
                self.polys.push(IPoly {
                    terms: vec![(reduced.lead().0.clone(), BigInt::one())],
                });
                self.sugar.push(0);
                self.active.push(0);
                return;
            }
            self.insert(reduced, sugar);
        }
    }
}

/// Computes the canonical reduced Gröbner basis of the ideal generated by
/// `generators` under degrevlex. The empty set yields the zero ideal.
pub fn reduced_groebner(vars: &Variables, generators: &[Polynomial]) -> GroebnerBasis {
    for g in generators {
        assert_eq!(g.variables(), vars, "generator over wrong variable list");
    }
    let mut input: Vec<IPoly> = generators
        .iter()
        .map(IPoly::from_rational)
        .filter(|p| !p.is_zero())
        .collect();
    // deterministic seeding order: by lead ascending, then term count
    input.sort_by(|a, b| {
        a.lead()
            .0
            .cmp(b.lead().0)
            .then_with(|| a.terms.len().cmp(&b.terms.len()))
            .then_with(|| cmp_terms(&a.terms, &b.terms))
    });
    input.dedup_by(|a, b| a.terms == b.terms);

    let trace = std::env::var_os("CROSSCAP_GB_TRACE").is_some();
    let t_start = std::time::Instant::now();
    let mut engine = Buchberger::new();
    for p in input {
        let sugar = p.total_degree();
        let reduced = reduce_head(p, &engine.polys, &engine.active);
        if reduced.is_zero() {
            continue;
        }
        if reduced.lead().0.is_one() {
            return GroebnerBasis {
                vars: vars.clone(),
                generators: vec![Polynomial::one(vars)],
            };
        }
        engine.insert(reduced, sugar);
    }
    if trace {
        eprintln!("gb phase: seeded in {:?}", t_start.elapsed());
    }
    engine.run();
    if trace {
        eprintln!("gb phase: pair loop done in {:?}", t_start.elapsed());
    }

    // minimal basis: active leads are pairwise non-divisible already
    let mut minimal: Vec<IPoly> = engine
        .active
        .iter()
        .map(|&i| engine.polys[i].clone())
        .collect();
    minimal.sort_by(|a, b| a.lead().0.cmp(b.lead().0));

    // tail-reduce each element against the others, fraction-free; leads are
    // untouched (pairwise non-divisible), so one pass reaches the reduced
    // form, which becomes canonical once made monic
    let mut reduced_gens = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<usize> = (0..minimal.len()).filter(|&j| j != i).collect();
        let nf = reduce_full(minimal[i].clone(), &minimal, &others);
        debug_assert!(!nf.is_zero());
        reduced_gens.push(nf.to_monic_rational(vars));
    }
    if trace {
        eprintln!("gb phase: tail-reduced in {:?}", t_start.elapsed());
    }
    reduced_gens.sort_by(|a, b| a.leading_term().unwrap().0.cmp(b.leading_term().unwrap().0));
    GroebnerBasis {
        vars: vars.clone(),
        generators: reduced_gens,
    }
}

fn cmp_terms(a: &[(Monomial, BigInt)], b: &[(Monomial, BigInt)]) -> Ordering {
    for ((ma, ca), (mb, cb)) in a.iter().zip(b) {
        match ma.cmp(mb).then_with(|| ca.cmp(cb)) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    a.len().cmp(&b.len())
}
