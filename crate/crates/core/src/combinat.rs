//! Small enumeration helpers shared by the group and word code.

/// Rearranges `items` into the next permutation in lexicographic order,
/// returning `false` (and leaving the slice sorted ascending) after the last one.
/// Repeated items are handled, so this walks multiset permutations.
pub fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        items.reverse();
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `n! / (k_1! k_2! ...)` for `n = sum k_i`.
pub fn multinomial(parts: &[usize]) -> u128 {
    let n: usize = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(n), |acc, &k| acc / factorial(k))
}

/// Every way to split `{1..n}` into consecutive blocks of the given sizes,
/// each block sorted, listed in lexicographic order of the block contents.
pub fn set_compositions(sizes: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let n: usize = sizes.iter().sum();
    let pool: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    split_rec(&pool, sizes, &mut current, &mut out);
    out
}

fn split_rec(
    pool: &[usize],
    sizes: &[usize],
    current: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let Some((&k, rest)) = sizes.split_first() else {
        out.push(current.clone());
        return;
    };
    for chosen in subsets(pool, k) {
        let remaining: Vec<usize> = pool
            .iter()
            .copied()
            .filter(|v| !chosen.contains(v))
            .collect();
        current.push(chosen);
        split_rec(&remaining, rest, current, out);
        current.pop();
    }
}

/// All `k`-subsets of `pool` (kept in pool order), lexicographically.
pub fn subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if pool.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &first) in pool.iter().enumerate() {
        for mut tail in subsets(&pool[i + 1..], k - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_permutations_in_order() {
        let mut w = vec![1, 1, 2, 3];
        let mut seen = vec![w.clone()];
        while next_permutation(&mut w) {
            seen.push(w.clone());
        }
        assert_eq!(seen.len(), 12);
        assert!(seen.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(w, vec![1, 1, 2, 3]);
    }

    #[test]
    fn counts() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(5), 120);
        assert_eq!(multinomial(&[2, 1, 1]), 12);
        assert_eq!(subsets(&[1, 2, 3, 4], 2).len(), 6);
        let splits = set_compositions(&[1, 2]);
        assert_eq!(
            splits,
            vec![
                vec![vec![1], vec![2, 3]],
                vec![vec![2], vec![1, 3]],
                vec![vec![3], vec![1, 2]],
            ]
        );
        assert_eq!(
            set_compositions(&[0, 0]),
            vec![vec![Vec::<usize>::new(), Vec::new()]]
        );
    }
}
