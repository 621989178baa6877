use crate::error::{bail, Result};

/// Exact binomial coefficient; `k > n` gives 0.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by i + 1 at every step.
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Multiplicity of spin `j` in the collective representation of `n_qubits`
/// spin-½ particles: `C(N, N/2 − j)·(2j+1)/(N/2 + j + 1)`.
pub fn multiplicity_dimension(n_qubits: u32, j: u32) -> Result<u64> {
    if !n_qubits.is_multiple_of(2) {
        bail!(Domain, "collective spin needs an even number of qubits, got {n_qubits}");
    }
    let half = n_qubits / 2;
    if j > half {
        bail!(Domain, "spin {j} out of range 0..={half} for {n_qubits} qubits");
    }
    let numerator = binomial(n_qubits as u64, (half - j) as u64) * (2 * j + 1) as u128;
    let denominator = (half + j + 1) as u128;
    debug_assert_eq!(numerator % denominator, 0);
    Ok((numerator / denominator) as u64)
}

/// Dimension `C(N + d − 1, d − 1)` of the symmetric subspace of `(ℂ^d)^{⊗N}`.
pub fn symmetric_subspace_dimension(copies: u64, d: u64) -> u128 {
    if d == 0 {
        return 0;
    }
    binomial(copies + d - 1, d - 1)
}
