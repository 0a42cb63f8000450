/// `C(n, k)`, zero when `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> i64 {
  if k < 0 || n < 0 || k > n {
    return 0;
  }
  let k = k.min(n - k);
  let mut acc: i64 = 1;
  for i in 0..k {
    acc = acc * (n - i) / (i + 1);
  }
  acc
}

/// Deterministic 64-bit mixing used to derive sub-seeds.
pub fn mix_seed(seed: u64, salt: u64) -> u64 {
  let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
  z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
  z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
  z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn binomials() {
    assert_eq!(binomial(5, 2), 10);
    assert_eq!(binomial(7, 0), 1);
    assert_eq!(binomial(3, 4), 0);
    assert_eq!(binomial(3, -1), 0);
    assert_eq!(binomial(-1, 0), 0);
    assert_eq!(binomial(20, 10), 184_756);
  }
}
