//! Weyl groups of the classical families as (signed) permutations.
//!
//! An element stores the images of the basis characters: `img[i] = +-(j+1)`
//! means `w . e_{i+1} = +- e_{j+1}`.  For types B/C the window notation
//! `[a_1 ... a_n]` uses values in `1..=2n` with `a > n` encoding the sign:
//! `w . e_i = e_{a_i}` when `a_i <= n` and `w . e_i = -e_{2n+1-a_i}` otherwise.

use crate::roots::{GroupError, Root, RootKind, RootSystem, Weight};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    img: Vec<i16>,
}

impl WeylElt {
    pub fn identity(n: usize) -> Self {
        WeylElt {
            img: (1..=n as i16).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.img.len()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| x == i as i16 + 1)
    }

    /// Composition acting on the left: `(self * other) . v = self . (other . v)`.
    pub fn compose(&self, other: &WeylElt) -> WeylElt {
        let img = other
            .img
            .iter()
            .map(|&x| {
                let s = x.signum();
                s * self.img[(x.abs() - 1) as usize]
            })
            .collect();
        WeylElt { img }
    }

    pub fn inverse(&self) -> WeylElt {
        let mut img = vec![0i16; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            let j = (x.abs() - 1) as usize;
            img[j] = x.signum() * (i as i16 + 1);
        }
        WeylElt { img }
    }

    fn act_generic<T>(&self, v: &[T]) -> Vec<T>
    where
        T: Clone + std::ops::Neg<Output = T> + num_traits::Zero,
    {
        let mut out = vec![T::zero(); v.len()];
        for (i, &x) in self.img.iter().enumerate() {
            let j = (x.abs() - 1) as usize;
            out[j] = if x > 0 { v[i].clone() } else { -v[i].clone() };
        }
        out
    }

    pub fn act_weight(&self, w: &Weight) -> Weight {
        Weight::new(self.act_generic::<BigInt>(w.coords()))
    }

    pub fn act_root(&self, r: &Root) -> Root {
        Root::new(self.act_generic::<i64>(r.coords()))
    }

    pub fn act_rationals(&self, v: &[BigRational]) -> Vec<BigRational> {
        self.act_generic::<BigRational>(v)
    }

    /// Window notation: digits in `1..=n` (type A) or `1..=2n` (types B/C).
    pub fn window_string(&self) -> String {
        let n = self.img.len() as i16;
        self.img
            .iter()
            .map(|&x| {
                let v = if x > 0 { x } else { 2 * n + 1 + x };
                v.to_string()
            })
            .collect::<Vec<_>>()
            .join("")
    }

    pub fn parse_window(s: &str, n: usize) -> Result<WeylElt, GroupError> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let err = || GroupError::WindowParse(s.to_string());
        let digits: Vec<i16> = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as i16).ok_or_else(err))
            .collect::<Result<_, _>>()?;
        if digits.len() != n {
            return Err(err());
        }
        let n16 = n as i16;
        let mut img = Vec::with_capacity(n);
        for &a in &digits {
            if a >= 1 && a <= n16 {
                img.push(a);
            } else if a > n16 && a <= 2 * n16 {
                img.push(-(2 * n16 + 1 - a));
            } else {
                return Err(err());
            }
        }
        let elt = WeylElt { img };
        let mut seen = vec![false; n];
        for &x in &elt.img {
            let j = (x.abs() - 1) as usize;
            if seen[j] {
                return Err(err());
            }
            seen[j] = true;
        }
        Ok(elt)
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window_string())
    }
}

/// Fully enumerated Weyl group with cached lengths, reduced words and the
/// Bruhat order (every supported group has at most 384 elements).
#[derive(Debug)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElt>,
    index: HashMap<WeylElt, usize>,
    length: Vec<u32>,
    rword: Vec<Vec<u8>>,
    simples: Vec<WeylElt>,
    bruhat: Vec<Vec<bool>>,
}

/// Which side a coset minimum is taken on: `Left` gives `^K W`, `Right` gives `W^K`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CosetSide {
    Left,
    Right,
}

impl WeylGroup {
    pub fn build(kind: RootKind, rank: usize) -> Self {
        let rs = RootSystem::new(kind, rank);
        let simples: Vec<WeylElt> = rs.simple().iter().map(|a| reflection_raw(&rs, a)).collect();
        let e = WeylElt::identity(rank);
        let mut elements = vec![e.clone()];
        let mut index = HashMap::new();
        index.insert(e, 0usize);
        let mut length = vec![0u32];
        let mut rword: Vec<Vec<u8>> = vec![vec![]];
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            for (si, s) in simples.iter().enumerate() {
                let ws = w.compose(s);
                if !index.contains_key(&ws) {
                    index.insert(ws.clone(), elements.len());
                    length.push(length[head] + 1);
                    let mut word = rword[head].clone();
                    word.push(si as u8);
                    rword.push(word);
                    elements.push(ws);
                }
            }
            head += 1;
        }
        let mut group = WeylGroup {
            rs,
            elements,
            index,
            length,
            rword,
            simples,
            bruhat: Vec::new(),
        };
        group.bruhat = group.compute_bruhat();
        group
    }

    /// Bruhat order via the lifting property on one fixed reduced word per
    /// element, filled in by increasing length.
    fn compute_bruhat(&self) -> Vec<Vec<bool>> {
        let n = self.elements.len();
        let mut leq = vec![vec![false; n]; n];
        for w_idx in 0..n {
            if self.length[w_idx] == 0 {
                leq[w_idx][0] = true;
                continue;
            }
            let s = *self.rword[w_idx].last().unwrap() as usize;
            let ws_idx = self.index[&self.elements[w_idx].compose(&self.simples[s])];
            debug_assert_eq!(self.length[ws_idx] + 1, self.length[w_idx]);
            for v_idx in 0..n {
                let vs_idx = self.index[&self.elements[v_idx].compose(&self.simples[s])];
                let row = if self.length[vs_idx] < self.length[v_idx] {
                    leq[vs_idx][ws_idx]
                } else {
                    leq[v_idx][ws_idx]
                };
                leq[v_idx][w_idx] = row;
            }
        }
        leq
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElt] {
        &self.elements
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn idx(&self, w: &WeylElt) -> usize {
        *self
            .index
            .get(w)
            .unwrap_or_else(|| panic!("element {} not in this Weyl group", w))
    }

    pub fn contains(&self, w: &WeylElt) -> bool {
        self.index.contains_key(w)
    }

    pub fn length(&self, w: &WeylElt) -> u32 {
        self.length[self.idx(w)]
    }

    /// One fixed reduced word (indices into the simple roots).
    pub fn reduced_word(&self, w: &WeylElt) -> &[u8] {
        &self.rword[self.idx(w)]
    }

    pub fn simple_reflection(&self, i: usize) -> &WeylElt {
        &self.simples[i]
    }

    pub fn reflection(&self, alpha: &Root) -> Result<WeylElt, GroupError> {
        if !self.rs.is_root(alpha) {
            return Err(GroupError::NotARoot(alpha.to_string()));
        }
        Ok(reflection_raw(&self.rs, alpha))
    }

    pub fn bruhat_leq(&self, v: &WeylElt, w: &WeylElt) -> bool {
        self.bruhat[self.idx(v)][self.idx(w)]
    }

    pub fn longest(&self) -> &WeylElt {
        let idx = (0..self.elements.len())
            .max_by_key(|&i| self.length[i])
            .unwrap();
        &self.elements[idx]
    }

    /// Longest element of the standard parabolic subgroup `W_K`,
    /// `K` given by indices into the simple roots.
    pub fn longest_in(&self, k: &[usize]) -> WeylElt {
        let elems = self.parabolic_elements(k);
        elems
            .into_iter()
            .max_by_key(|w| (self.length(w), std::cmp::Reverse(w.clone())))
            .unwrap()
    }

    /// All elements of the standard parabolic subgroup `W_K`.
    pub fn parabolic_elements(&self, k: &[usize]) -> Vec<WeylElt> {
        let mut seen = HashMap::new();
        let e = WeylElt::identity(self.rank());
        seen.insert(e.clone(), ());
        let mut queue = vec![e];
        let mut head = 0;
        while head < queue.len() {
            let w = queue[head].clone();
            for &i in k {
                let ws = w.compose(&self.simples[i]);
                if !seen.contains_key(&ws) {
                    seen.insert(ws.clone(), ());
                    queue.push(ws);
                }
            }
            head += 1;
        }
        queue
    }

    /// The set `E_w` of positive roots alpha with `l(w s_alpha) = l(w) - 1`,
    /// in the fixed positive-root enumeration order.
    pub fn lower_neighbors(&self, w: &WeylElt) -> Vec<Root> {
        let lw = self.length(w);
        self.rs
            .positive()
            .iter()
            .filter(|a| {
                let sa = reflection_raw(&self.rs, a);
                self.length(&w.compose(&sa)) + 1 == lw
            })
            .cloned()
            .collect()
    }

    /// Minimal-length coset representatives `^K W` (left) or `W^K` (right),
    /// ordered by (length, window).
    pub fn min_coset_reps(&self, k: &[usize], side: CosetSide) -> Vec<WeylElt> {
        let mut out: Vec<WeylElt> = self
            .elements
            .iter()
            .filter(|w| {
                k.iter().all(|&i| {
                    let s = &self.simples[i];
                    let sw = match side {
                        CosetSide::Left => s.compose(w),
                        CosetSide::Right => w.compose(s),
                    };
                    self.length(&sw) > self.length(w)
                })
            })
            .cloned()
            .collect();
        out.sort_by_key(|w| (self.length(w), w.window_string()));
        out
    }
}

fn reflection_raw(rs: &RootSystem, alpha: &Root) -> WeylElt {
    let n = rs.rank();
    let cr = rs.coroot(alpha);
    let mut img = Vec::with_capacity(n);
    for i in 0..n {
        // s_alpha(e_i) = e_i - <e_i, alpha^> alpha
        let mut v = vec![0i64; n];
        v[i] = 1;
        let pair = cr[i];
        for (t, x) in v.iter_mut().enumerate() {
            *x -= pair * alpha.coords()[t];
        }
        let nz: Vec<(usize, i64)> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(t, &c)| (t, c))
            .collect();
        assert!(nz.len() == 1 && nz[0].1.abs() == 1, "reflection image is not signed-basis");
        img.push(nz[0].1 as i16 * (nz[0].0 as i16 + 1));
    }
    WeylElt { img }
}
