// Dense statevector simulator (<= 14 qubits) and the trace-estimation
// circuits built on it: rank-1 and LCU block encodings, a dense unitary
// dilation of a contraction, the Hadamard test, Hutchinson sampling and
// phase estimation on the Hermitian dilation.
//
// Qubit 0 is the least significant bit of a basis index. Block encodings put
// the data register on the low qubits and ancillas above it, so the
// ancilla-zero block is the top-left corner of the unitary.

#pragma once

#include "ramsey/spectral.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ramsey::qsim {

using spectral::Complex;
using spectral::Matrix;

inline constexpr int max_qubits = 14;

class StateVector {
public:
    /// |0...0>.
    explicit StateVector(int qubits);
    static StateVector basis(int qubits, std::uint64_t index);
    /// Normalises the input; its length must be 2^qubits.
    static StateVector from_amplitudes(std::vector<Complex> amps);

    int qubits() const noexcept { return qubits_; }
    std::size_t size() const noexcept { return amp_.size(); }
    std::vector<Complex>& amplitudes() noexcept { return amp_; }
    const std::vector<Complex>& amplitudes() const noexcept { return amp_; }
    double norm() const;
    /// Probability that the given qubits read `value` (bit i of value for qubits[i]).
    double probability(std::span<const int> qubits, std::uint64_t value) const;

private:
    int qubits_ = 0;
    std::vector<Complex> amp_;
};

/// Dense unitary on `targets` (targets[0] is the matrix LSB), applied when
/// every control qubit equals its control value.
struct Gate {
    Matrix u;
    std::vector<int> targets;
    std::vector<int> controls;
    std::vector<int> control_values;

    /// Checks shapes and U^H U = I within 1e-9.
    void validate(int qubits) const;
};

void apply(StateVector& s, const Gate& g);

class Circuit {
public:
    explicit Circuit(int qubits);

    int qubits() const noexcept { return qubits_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }

    Circuit& add(Gate g);
    Circuit& add(const Matrix& u, std::vector<int> targets, std::vector<int> controls = {},
                 std::vector<int> control_values = {});

    /// Applies every gate; throws std::logic_error if the norm drifts by more
    /// than 1e-10 after any gate.
    void apply(StateVector& s) const;
    /// Column j is the circuit applied to |j>.
    Matrix to_matrix() const;

private:
    int qubits_;
    std::vector<Gate> gates_;
};

Matrix hadamard();
Matrix pauli_x();
/// Unitary whose first column is v (unit norm), completed by Gram-Schmidt.
Matrix prep_unitary(std::span<const Complex> v);
/// N x N inverse quantum Fourier transform.
Matrix inverse_qft(std::size_t n);

int qubits_for(std::size_t dim);

struct BlockEncoding {
    Circuit circuit{0};
    /// Dense form of the circuit.
    Matrix unitary;
    int data_qubits = 0;
    int ancillas = 0;
    /// Logical data dimension (before padding to a power of two).
    std::size_t dim = 0;
    double alpha0 = 1.0;

    /// (<0^a| x I) U (|0^a> x I), restricted to the logical dimension.
    Matrix block() const;
};

/// Block equal to (1/2)|u><v| with one ancilla. Throws invalid_argument for
/// non-unit or mismatched inputs.
BlockEncoding block_encode_rank1(std::span<const Complex> u, std::span<const Complex> v);

struct LcuTerm {
    Complex weight;
    std::vector<Complex> u;
    std::vector<Complex> v;
};

/// Block * alpha0 = sum_j w_j |u_j><v_j|, alpha0 = 2 sum |w_j|.
BlockEncoding lcu_block_encode(const std::vector<LcuTerm>& terms);

/// U = [[G, sqrt(I - G G^H)], [sqrt(I - G^H G), -G^H]] with G = F / alpha0,
/// alpha0 = max(1, ||F||_2).
BlockEncoding dilation_encode(const Matrix& f);

/// Encoding of e^{-alpha A} through dilation_encode.
BlockEncoding encode_exp(const Matrix& a, double alpha);

/// Re <probe|U|probe> from the test-ancilla Z expectation. shots = 0 gives
/// the exact expectation; otherwise the ancilla is sampled.
double hadamard_test(const Matrix& u, const StateVector& probe, std::uint64_t shots = 0,
                     std::uint64_t seed = 0);

struct TraceEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    int probes = 0;
};

/// alpha0 * d * mean Re<r|F/alpha0|r> over Gaussian-normalised complex probes.
TraceEstimate hutchinson_trace(const BlockEncoding& enc, int probes, std::uint64_t seed,
                               std::uint64_t shots = 0);

class PhaseWrapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PhaseEstimate {
    double estimate = 0.0;
    double resolution = 0.0;
    std::int64_t signed_outcome = 0;
    double probability = 0.0;
};

enum class PhaseInput { top_eigenvector, random_state };

/// |lambda| read from the most likely outcome of m-bit phase estimation with
/// controlled e^{-i 2^l t H}, H the dilation of A. Requires t ||A|| < pi and
/// m <= 8; an outcome on the wrap boundary throws PhaseWrapError.
PhaseEstimate phase_estimate_dilation(const Matrix& a, int m, double t,
                                      PhaseInput input = PhaseInput::top_eigenvector,
                                      std::uint64_t seed = 0);

}  // namespace ramsey::qsim
