//! Full-tree wavelet packet transform.

use super::dwt::{analyze, check_levels, coeff_len, synthesize};
use super::WaveletFilterBank;
use crate::error::{Error, Result};
use crate::signal::{PadMode, Signal};

/// Frequency rank `G[j]` of the natural-order (filter path) node `j` at depth `levels`.
///
/// Built from `G[0] = 0` by
/// `G[2j] = 2G[j] + (G[j] mod 2)` and `G[2j+1] = 2G[j] + 1 - (G[j] mod 2)`.
pub fn gray_permutation(levels: usize) -> Vec<usize> {
    let mut g = vec![0usize];
    for _ in 0..levels {
        let mut next = vec![0; 2 * g.len()];
        for (j, &gj) in g.iter().enumerate() {
            let odd = gj % 2;
            next[2 * j] = 2 * gj + odd;
            next[2 * j + 1] = 2 * gj + 1 - odd;
        }
        g = next;
    }
    g
}

pub fn inverse_permutation(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// Leaves of a full packet tree, one row per band in increasing frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct WptLeaves {
    pub matrix: Vec<Vec<f64>>,
    pub levels: usize,
    pub wavelet: String,
    pub mode: PadMode,
    pub original_len: usize,
    pub padded_len: usize,
    pub rate: u32,
}

impl WptLeaves {
    pub fn leaf_len(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }
}

fn node_lengths(padded_len: usize, filter_len: usize, mode: PadMode, levels: usize) -> Vec<usize> {
    let mut lens = vec![padded_len];
    for _ in 0..levels {
        let last = *lens.last().unwrap();
        lens.push(coeff_len(last, filter_len, mode));
    }
    lens
}

pub fn wpt(s: &Signal, bank: &WaveletFilterBank, levels: usize, mode: PadMode) -> Result<WptLeaves> {
    check_levels(s.len(), levels)?;
    let padded_len = s.len().next_multiple_of(1 << levels);
    let mut root = s.samples().to_vec();
    root.resize(padded_len, 0.0);
    let mut nodes = vec![root];
    for _ in 0..levels {
        let mut next = Vec::with_capacity(2 * nodes.len());
        for node in &nodes {
            let (a, d) = analyze(node, &bank.rec_lo, &bank.rec_hi, mode);
            next.push(a);
            next.push(d);
        }
        nodes = next;
    }
    let order = inverse_permutation(&gray_permutation(levels));
    let matrix = order.iter().map(|&j| std::mem::take(&mut nodes[j])).collect();
    Ok(WptLeaves {
        matrix,
        levels,
        wavelet: bank.name.clone(),
        mode,
        original_len: s.len(),
        padded_len,
        rate: s.rate(),
    })
}

pub fn iwpt(leaves: &WptLeaves, bank: &WaveletFilterBank) -> Result<Signal> {
    let rows = 1usize << leaves.levels;
    if leaves.matrix.len() != rows {
        return Err(Error::ShapeMismatch(format!(
            "{} leaf rows for {} levels",
            leaves.matrix.len(),
            leaves.levels
        )));
    }
    let lens = node_lengths(leaves.padded_len, bank.filter_len(), leaves.mode, leaves.levels);
    if leaves.matrix.iter().any(|r| r.len() != lens[leaves.levels]) {
        return Err(Error::ShapeMismatch("leaf length does not match the recorded input length".into()));
    }
    let rank = gray_permutation(leaves.levels);
    let mut nodes: Vec<Vec<f64>> = rank.iter().map(|&k| leaves.matrix[k].clone()).collect();
    for depth in (0..leaves.levels).rev() {
        nodes = nodes
            .chunks(2)
            .map(|pair| synthesize(&pair[0], &pair[1], &bank.rec_lo, &bank.rec_hi, leaves.mode, lens[depth]))
            .collect::<Result<_>>()?;
    }
    let mut out = nodes.pop().unwrap_or_default();
    out.truncate(leaves.original_len);
    Signal::new(out, leaves.rate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wavelet::{dwt_step, lookup};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gray_examples() {
        assert_eq!(gray_permutation(0), vec![0]);
        assert_eq!(gray_permutation(2), vec![0, 1, 3, 2]);
        let g = gray_permutation(3);
        assert_eq!(g, vec![0, 1, 3, 2, 7, 6, 4, 5]);
        assert_eq!(inverse_permutation(&g), vec![0, 1, 3, 2, 6, 7, 5, 4]);
    }

    #[test]
    fn gray_is_a_bijection_and_inverse_is_binary_reflected_code() {
        for levels in 0..=12 {
            let g = gray_permutation(levels);
            let inv = inverse_permutation(&g);
            let mut seen = vec![false; g.len()];
            for (j, &k) in g.iter().enumerate() {
                assert!(!seen[k]);
                seen[k] = true;
                assert_eq!(inv[k], j);
                assert_eq!(inv[j], j ^ (j >> 1));
            }
        }
    }

    #[test]
    fn depth_one_equals_single_step() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let x: Vec<f64> = (0..128).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let bank = lookup("db3").unwrap();
        let leaves = wpt(&Signal::new(x.clone(), 8000).unwrap(), &bank, 1, PadMode::Periodic).unwrap();
        let (a, d) = dwt_step(&x, &bank, PadMode::Periodic).unwrap();
        assert_eq!(leaves.matrix, vec![a, d]);
    }

    #[test]
    fn leaf_shape_and_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x: Vec<f64> = (0..1000).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let s = Signal::new(x.clone(), 8000).unwrap();
        for mode in [PadMode::Periodic, PadMode::Zero, PadMode::Symmetric] {
            let bank = lookup("sym4").unwrap();
            let leaves = wpt(&s, &bank, 4, mode).unwrap();
            assert_eq!(leaves.matrix.len(), 16);
            if mode == PadMode::Periodic {
                assert_eq!(leaves.padded_len, 1008);
                assert_eq!(leaves.leaf_len(), 63);
            }
            let back = iwpt(&leaves, &bank).unwrap();
            let err = x.iter().zip(back.samples()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            assert!(err < 1e-10, "{mode}: {err}");
        }
    }

    #[test]
    fn shape_errors() {
        let s = Signal::new(vec![0.5; 64], 8000).unwrap();
        let bank = lookup("haar").unwrap();
        assert!(wpt(&s, &bank, 7, PadMode::Periodic).is_err());
        let mut leaves = wpt(&s, &bank, 2, PadMode::Periodic).unwrap();
        leaves.matrix.pop();
        assert!(iwpt(&leaves, &bank).is_err());
    }
}
