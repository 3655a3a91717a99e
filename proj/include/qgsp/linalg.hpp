#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgsp {

using Complex = std::complex<double>;

// Thrown when a caller violates a documented precondition.
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an iterative routine fails to reach its tolerance.
struct NumericError : std::runtime_error {
    double residual = 0.0;
    explicit NumericError(const std::string& msg, double res = 0.0)
        : std::runtime_error(msg), residual(res) {}
};

// Dense complex matrix, row-major.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;

    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix operator*(Complex s) const;
    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);

    double frobenius_norm() const;
    double max_abs() const;

    bool is_square() const { return rows_ == cols_; }
    bool is_hermitian(double tol = 1e-10) const;
    bool is_unitary(double tol = 1e-10) const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> data_;
};

// Normalized (where required) state vector on a power-of-two dimension.
class StateVector {
  public:
    StateVector() = default;
    explicit StateVector(int dim) : amps_(dim) {}
    explicit StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {}

    static StateVector basis(int dim, int index);

    int dim() const { return static_cast<int>(amps_.size()); }
    Complex& operator[](int i) { return amps_[i]; }
    const Complex& operator[](int i) const { return amps_[i]; }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    std::vector<Complex>& amplitudes() { return amps_; }

    double norm() const;
    // Rescales to unit norm; throws on (near-)zero input.
    void normalize();

  private:
    std::vector<Complex> amps_;
};

Complex inner(const StateVector& a, const StateVector& b);  // <a|b>
double fidelity(const StateVector& a, const StateVector& b); // |<a|b>|
StateVector tensor(const StateVector& a, const StateVector& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector apply(const ComplexMatrix& u, const StateVector& s);
ComplexMatrix outer(const StateVector& a, const StateVector& b); // |a><b|

// Largest singular value of A - B.
double operator_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double operator_norm(const ComplexMatrix& a);

struct EigResult {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // orthonormal columns, eigenvectors.col(k) <-> eigenvalues[k]
    StateVector column(int k) const;
};

// Cyclic Jacobi eigensolver for Hermitian matrices. Input must be Hermitian
// within hermitian_tol or a ContractError is thrown.
EigResult eig_hermitian(const ComplexMatrix& a, double hermitian_tol = 1e-10);

// Hermitian square root of I - B^2 for Hermitian B with ||B|| <= 1.
ComplexMatrix sqrt_one_minus_square(const ComplexMatrix& b);

// Deterministic seeded RNG. Draws do not depend on the platform's
// distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next_u64();
    double uniform();   // [0, 1)
    double normal();    // standard Gaussian, Box-Muller
    // Independent child stream; deterministic in (seed, stream).
    Rng split(std::uint64_t stream) const;
    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

struct MeasureResult {
    std::vector<int> bits;  // outcomes of the requested qubits, in request order
    StateVector post;       // renormalized post-measurement state
    int pattern = 0;        // bits packed MSB-first in request order
};

// Projective measurement of the listed qubits (qubit 0 = most significant).
MeasureResult measure(const StateVector& s, const std::vector<int>& qubit_indices, Rng& rng);

// Probability that the listed qubits all read the given pattern.
double pattern_probability(const StateVector& s, const std::vector<int>& qubit_indices, int pattern);

int qubit_count(int dim);  // log2, throws if dim is not a power of two

}  // namespace qgsp
