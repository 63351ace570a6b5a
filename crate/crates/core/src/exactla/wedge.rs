//! Strictly increasing multi-indices for wedge powers, and block shuffles.

use std::fmt;

/// Strictly increasing tuple of 0-based basis positions; the basis
/// bookkeeping for `Λ^k`. Arity 0 is the unique empty index.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgeIndex(pub Vec<usize>);

impl WedgeIndex {
    pub fn new(indices: Vec<usize>) -> Self {
        assert!(
            indices.windows(2).all(|w| w[0] < w[1]),
            "wedge index must be strictly increasing"
        );
        WedgeIndex(indices)
    }

    pub fn empty() -> Self {
        WedgeIndex(Vec::new())
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Debug for WedgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "∧{:?}", self.0)
    }
}

/// Binomial coefficient as usize; 0 when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All C(n,k) strictly increasing k-tuples in 0..n, lexicographic order.
/// Empty list when `k > n`; the single empty index when `k = 0`.
pub fn wedge_enumerate(n: usize, k: usize) -> Vec<WedgeIndex> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![WedgeIndex::empty()];
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(WedgeIndex(cur.clone()));
        // advance to the next increasing tuple
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (k - i) {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Position of a strictly increasing tuple in the lexicographic enumeration
/// of `wedge_enumerate(n, k)` (combinatorial ranking).
pub fn wedge_position(n: usize, indices: &[usize]) -> usize {
    let k = indices.len();
    let mut pos = 0;
    let mut prev = 0;
    for (slot, &idx) in indices.iter().enumerate() {
        for v in prev..idx {
            pos += binomial(n - v - 1, k - slot - 1);
        }
        prev = idx + 1;
    }
    pos
}

/// Sort `indices` ascending in place; returns the sign of the sorting
/// permutation, or `None` when two entries coincide.
pub fn sort_with_sign(indices: &mut [usize]) -> Option<i8> {
    let mut sign = 1i8;
    // insertion sort, counting transpositions
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if indices.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

fn inversion_sign(word: &[usize]) -> i8 {
    let mut sign = 1i8;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Enumerate the block shuffles of `0..N` for the given block sizes:
/// permutations that are increasing within each consecutive block. Each entry
/// is the permutation word `(σ(1),…,σ(N))` (0-based) together with the sign
/// of the permutation, computed by counting inversions. Any block size of
/// usize::MAX-like underflow is prevented by the caller; a size of 0 yields an
/// empty block.
pub fn shuffles(block_sizes: &[usize]) -> Vec<(Vec<usize>, i8)> {
    let total: usize = block_sizes.iter().sum();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(total);
    let mut remaining: Vec<usize> = (0..total).collect();
    fn rec(
        sizes: &[usize],
        word: &mut Vec<usize>,
        remaining: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, i8)>,
    ) {
        let Some((&size, rest)) = sizes.split_first() else {
            out.push((word.clone(), inversion_sign(word)));
            return;
        };
        // choose an increasing subset of `remaining` for this block
        let n = remaining.len();
        let mut choice: Vec<usize> = (0..size).collect();
        if size > n {
            return;
        }
        loop {
            let picked: Vec<usize> = choice.iter().map(|&p| remaining[p]).collect();
            let mut rem2: Vec<usize> = Vec::with_capacity(n - size);
            let mut ci = 0;
            for (p, &v) in remaining.iter().enumerate() {
                if ci < size && choice[ci] == p {
                    ci += 1;
                } else {
                    rem2.push(v);
                }
            }
            let len_before = word.len();
            word.extend_from_slice(&picked);
            rec(rest, word, &mut rem2, out);
            word.truncate(len_before);

            // next combination
            let mut i = size;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if choice[i] < n - (size - i) {
                    choice[i] += 1;
                    for j in i + 1..size {
                        choice[j] = choice[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    rec(block_sizes, &mut word, &mut remaining, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn enumerate_examples() {
        let idx = |v: Vec<usize>| WedgeIndex(v);
        // 1-based in the docs, 0-based internally
        assert_eq!(wedge_enumerate(2, 1), vec![idx(vec![0]), idx(vec![1])]);
        assert_eq!(
            wedge_enumerate(3, 2),
            vec![idx(vec![0, 1]), idx(vec![0, 2]), idx(vec![1, 2])]
        );
        assert_eq!(wedge_enumerate(2, 3), Vec::<WedgeIndex>::new());
        assert_eq!(wedge_enumerate(4, 0), vec![WedgeIndex::empty()]);
    }

    #[test]
    fn sort_sign_counts_transpositions() {
        let mut v = vec![2, 0, 1];
        assert_eq!(sort_with_sign(&mut v), Some(1));
        assert_eq!(v, vec![0, 1, 2]);
        let mut v = vec![1, 0];
        assert_eq!(sort_with_sign(&mut v), Some(-1));
        let mut v = vec![1, 1];
        assert_eq!(sort_with_sign(&mut v), None);
    }

    #[test]
    fn shuffle_counts_and_signs() {
        // (1,1)-shuffles of two symbols: identity and the transposition
        let s = shuffles(&[1, 1]);
        assert_eq!(s.len(), 2);
        assert_eq!(s[0], (vec![0, 1], 1));
        assert!(s.contains(&(vec![1, 0], -1)));
        // (2,1)-shuffles of 3 symbols: C(3,2) = 3 of them
        let s = shuffles(&[2, 1]);
        assert_eq!(s.len(), 3);
        for (word, sign) in &s {
            assert!(word[0] < word[1]);
            assert_eq!(*sign, inversion_sign(word));
        }
    }

    proptest! {
        #[test]
        fn enumeration_is_complete_and_increasing(n in 0usize..7, k in 0usize..7) {
            let all = wedge_enumerate(n, k);
            prop_assert_eq!(all.len(), binomial(n, k));
            for w in &all {
                prop_assert!(w.indices().windows(2).all(|p| p[0] < p[1]));
                prop_assert!(w.indices().iter().all(|&i| i < n));
            }
            for (pos, w) in all.iter().enumerate() {
                prop_assert_eq!(wedge_position(n, w.indices()), pos);
            }
        }

        #[test]
        fn shuffles_partition_the_symmetric_group(p in 0usize..3, q in 0usize..3, r in 0usize..3) {
            let total = p + q + r;
            let count: usize = shuffles(&[p, q, r]).len();
            // multinomial coefficient (p+q+r)! / (p! q! r!)
            let fact = |m: usize| (1..=m).product::<usize>();
            prop_assert_eq!(count, fact(total) / (fact(p) * fact(q) * fact(r)));
        }
    }
}
