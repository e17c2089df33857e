//! Buchberger engine with degree truncation and incremental continuation.
//!
//! Polynomials are held as monic term vectors sorted descending, each
//! monomial paired with its order key. All supported orders have keys that
//! are linear in the exponent vector, so shifting a term by a monomial is a
//! vector addition on both parts.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use crate::field::Scalar;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Keyed {
    key: Vec<i64>,
    mono: Monomial,
}

impl Ord for Keyed {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl PartialOrd for Keyed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Keyed {
    pub(crate) fn new(order: &MonomialOrder, mono: Monomial) -> Self {
        Keyed { key: order.key(&mono), mono }
    }

    fn shifted(&self, by: &Keyed) -> Keyed {
        Keyed { key: self.key.iter().zip(&by.key).map(|(a, b)| a + b).collect(), mono: self.mono.mul(&by.mono) }
    }

    fn quotient(&self, by: &Keyed) -> Keyed {
        Keyed { key: self.key.iter().zip(&by.key).map(|(a, b)| a - b).collect(), mono: self.mono.div(&by.mono) }
    }
}

/// Monic polynomial with terms sorted descending.
#[derive(Debug, Clone)]
pub(crate) struct OrderedPoly {
    terms: Vec<(Keyed, Scalar)>,
}

impl OrderedPoly {
    fn from_map(map: BTreeMap<Keyed, Scalar>) -> Self {
        OrderedPoly { terms: map.into_iter().rev().collect() }
    }

    pub(crate) fn from_polynomial(p: &Polynomial, order: &MonomialOrder) -> Self {
        let map: BTreeMap<Keyed, Scalar> = p.terms().map(|(m, c)| (Keyed::new(order, m.clone()), c.clone())).collect();
        Self::from_map(map).into_monic()
    }

    fn into_monic(mut self) -> Self {
        if let Some((_, lc)) = self.terms.first() {
            if !lc.is_one() {
                let inv = lc.inv().expect("nonzero leading coefficient");
                for (_, c) in self.terms.iter_mut() {
                    *c = &*c * &inv;
                }
            }
        }
        self
    }

    pub(crate) fn lead(&self) -> &Keyed {
        &self.terms[0].0
    }

    pub(crate) fn leading_monomial(&self) -> &Monomial {
        &self.terms[0].0.mono
    }

    pub(crate) fn to_polynomial(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().map(|(k, c)| (k.mono.clone(), c.clone())))
    }

    fn degree(&self) -> u32 {
        self.terms.iter().map(|(k, _)| k.mono.degree()).max().unwrap_or(0)
    }
}

/// A list of monic reducers; reduction uses the first (in insertion order)
/// active element whose leading monomial divides.
#[derive(Debug, Clone)]
pub(crate) struct Reducer {
    pub(crate) order: MonomialOrder,
    pub(crate) polys: Vec<OrderedPoly>,
    pub(crate) active: Vec<bool>,
}

impl Reducer {
    pub(crate) fn new(order: MonomialOrder) -> Self {
        Reducer { order, polys: Vec::new(), active: Vec::new() }
    }

    pub(crate) fn push(&mut self, p: OrderedPoly) -> usize {
        self.polys.push(p);
        self.active.push(true);
        self.polys.len() - 1
    }

    fn find_reducer(&self, m: &Monomial) -> Option<&OrderedPoly> {
        self.polys.iter().zip(&self.active).find(|(g, a)| **a && g.leading_monomial().divides(m)).map(|(g, _)| g)
    }

    pub(crate) fn is_reducible(&self, m: &Monomial) -> bool {
        self.find_reducer(m).is_some()
    }

    /// Fully reduced remainder, terms descending (not normalized).
    pub(crate) fn reduce_map(&self, mut work: BTreeMap<Keyed, Scalar>) -> Vec<(Keyed, Scalar)> {
        let mut rem = Vec::new();
        while let Some((k, c)) = work.pop_last() {
            match self.find_reducer(&k.mono) {
                Some(g) => {
                    let q = k.quotient(g.lead());
                    for (t, s) in &g.terms[1..] {
                        let nk = t.shifted(&q);
                        let delta = -&(&c * s);
                        match work.entry(nk) {
                            std::collections::btree_map::Entry::Vacant(v) => {
                                v.insert(delta);
                            }
                            std::collections::btree_map::Entry::Occupied(mut o) => {
                                let sum = o.get() + &delta;
                                if sum.is_zero() {
                                    o.remove();
                                } else {
                                    *o.get_mut() = sum;
                                }
                            }
                        }
                    }
                }
                None => rem.push((k, c)),
            }
        }
        rem
    }

    pub(crate) fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let work: BTreeMap<Keyed, Scalar> =
            f.terms().map(|(m, c)| (Keyed::new(&self.order, m.clone()), c.clone())).collect();
        let rem = self.reduce_map(work);
        Polynomial::from_terms(f.ring(), rem.into_iter().map(|(k, c)| (k.mono, c)))
    }

    /// Indices of active elements in insertion order.
    pub(crate) fn active_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.active.iter().enumerate().filter(|(_, a)| **a).map(|(i, _)| i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Work {
    Input(usize),
    Pair(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Entry {
    degree: u32,
    lcm: Keyed,
    work: Work,
}

/// Incremental Buchberger state.
///
/// The queue holds unprocessed s-pairs and not-yet-reduced input generators,
/// ordered by (lcm degree, lcm under the monomial order). Processing every
/// entry of degree at most `d` yields a `d`-truncated Groebner basis; more
/// entries can be processed later without recomputation.
#[derive(Debug, Clone)]
pub struct GroebnerEngine {
    ring: Ring,
    pub(crate) reducer: Reducer,
    inputs: Vec<OrderedPoly>,
    queue: BTreeSet<Entry>,
    /// Every queue entry of degree at most this has been processed.
    done_to: i64,
}

impl GroebnerEngine {
    pub fn new(ring: &Ring, order: MonomialOrder) -> Self {
        GroebnerEngine {
            ring: ring.clone(),
            reducer: Reducer::new(order),
            inputs: Vec::new(),
            queue: BTreeSet::new(),
            done_to: i64::MAX,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.reducer.order
    }

    /// Queues a generator; it is reduced when its degree is reached.
    pub fn add_generator(&mut self, p: &Polynomial) {
        assert!(p.ring() == &self.ring, "generator from a different ring");
        if p.is_zero() {
            return;
        }
        let op = OrderedPoly::from_polynomial(p, &self.reducer.order);
        let entry = Entry { degree: op.degree(), lcm: op.lead().clone(), work: Work::Input(self.inputs.len()) };
        self.inputs.push(op);
        self.enqueue(entry);
    }

    fn enqueue(&mut self, entry: Entry) {
        self.done_to = self.done_to.min(entry.degree as i64 - 1);
        self.queue.insert(entry);
    }

    /// Processes all queued work of degree at most `d`.
    pub fn complete_to(&mut self, d: u32) {
        while let Some(first) = self.queue.first() {
            if first.degree > d {
                break;
            }
            let entry = self.queue.pop_first().unwrap();
            self.process(entry);
        }
        self.done_to = self.done_to.max(d as i64);
    }

    /// Runs Buchberger's algorithm to completion.
    pub fn complete(&mut self) {
        while let Some(entry) = self.queue.pop_first() {
            self.process(entry);
        }
        self.done_to = i64::MAX;
    }

    /// Degree up to which the basis is known to be truncated-Groebner, or
    /// `None` when the queue is empty (a full basis).
    pub fn truncation(&self) -> Option<u32> {
        if self.queue.is_empty() {
            None
        } else {
            Some(self.done_to.clamp(0, u32::MAX as i64) as u32)
        }
    }

    fn process(&mut self, entry: Entry) {
        let work = match entry.work {
            Work::Input(i) => self.inputs[i].terms.iter().map(|(k, c)| (k.clone(), c.clone())).collect(),
            Work::Pair(i, j) => self.s_polynomial(i, j, &entry.lcm),
        };
        let rem = self.reducer.reduce_map(work);
        if !rem.is_empty() {
            self.insert(OrderedPoly { terms: rem }.into_monic());
        }
    }

    fn s_polynomial(&self, i: usize, j: usize, lcm: &Keyed) -> BTreeMap<Keyed, Scalar> {
        let (f, g) = (&self.reducer.polys[i], &self.reducer.polys[j]);
        let qf = lcm.quotient(f.lead());
        let qg = lcm.quotient(g.lead());
        let mut work: BTreeMap<Keyed, Scalar> = f.terms[1..].iter().map(|(t, c)| (t.shifted(&qf), c.clone())).collect();
        for (t, c) in &g.terms[1..] {
            let k = t.shifted(&qg);
            let v = match work.remove(&k) {
                Some(a) => &a - c,
                None => -c,
            };
            if !v.is_zero() {
                work.insert(k, v);
            }
        }
        work
    }

    /// Adjoins `h`, which must already be in normal form with respect to the
    /// current basis, and queues its s-pairs.
    pub fn adjoin_reduced(&mut self, h: &Polynomial) {
        debug_assert!(self.reducer.normal_form(h) == *h, "adjoined polynomial must be reduced");
        if h.is_zero() {
            return;
        }
        self.insert(OrderedPoly::from_polynomial(h, &self.reducer.order));
    }

    /// Gebauer-Moeller update followed by insertion.
    fn insert(&mut self, h: OrderedPoly) {
        let order = self.reducer.order;
        let t = self.reducer.polys.len();
        let lm_h = h.leading_monomial().clone();

        let candidates: Vec<(usize, Monomial, bool)> = self
            .reducer
            .active_indices()
            .map(|i| {
                let lm_i = self.reducer.polys[i].leading_monomial();
                (i, lm_i.lcm(&lm_h), lm_i.is_coprime(&lm_h))
            })
            .collect();

        // Criterion M: drop (i, h) when some other lcm(j, h) properly divides lcm(i, h).
        let survivors: Vec<&(usize, Monomial, bool)> = candidates
            .iter()
            .filter(|(_, l, _)| !candidates.iter().any(|(_, l2, _)| l2 != l && l2.divides(l)))
            .collect();
        // Criterion F and the product criterion: one pair per lcm, none if any is coprime.
        let mut by_lcm: BTreeMap<&Monomial, (usize, bool)> = BTreeMap::new();
        for (i, l, coprime) in survivors {
            by_lcm.entry(l).and_modify(|e| e.1 |= *coprime).or_insert((*i, *coprime));
        }
        let new_pairs: Vec<(usize, Monomial)> =
            by_lcm.into_iter().filter(|(_, (_, c))| !c).map(|(l, (i, _))| (i, l.clone())).collect();

        // Criterion B on the old pairs.
        let polys = &self.reducer.polys;
        self.queue.retain(|e| match e.work {
            Work::Pair(i, j) => {
                let l = &e.lcm.mono;
                let li = polys[i].leading_monomial().lcm(&lm_h);
                let lj = polys[j].leading_monomial().lcm(&lm_h);
                !(lm_h.divides(l) && li != *l && lj != *l)
            }
            Work::Input(_) => true,
        });

        for (i, l) in new_pairs {
            let degree = l.degree();
            self.enqueue(Entry { degree, lcm: Keyed::new(&order, l), work: Work::Pair(i, t) });
        }
        for i in 0..self.reducer.polys.len() {
            if self.reducer.active[i] && lm_h.divides(self.reducer.polys[i].leading_monomial()) {
                self.reducer.active[i] = false;
            }
        }
        self.reducer.push(h);
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.reducer.normal_form(f)
    }

    /// Whether some active leading monomial divides `m`.
    pub fn is_reducible(&self, m: &Monomial) -> bool {
        self.reducer.is_reducible(m)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.reducer.active_indices().map(|i| self.reducer.polys[i].leading_monomial().clone()).collect()
    }

    /// Active basis elements (monic) in insertion order.
    pub fn generators(&self) -> Vec<Polynomial> {
        self.reducer.active_indices().map(|i| self.reducer.polys[i].to_polynomial(&self.ring)).collect()
    }

    pub fn pending(&self) -> usize {
        self.queue.len()
    }
}
