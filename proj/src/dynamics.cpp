#include "rydline/dynamics.hpp"

#include <algorithm>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <sstream>

#include "rydline/constants.hpp"

namespace rydline::dynamics {

namespace {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Places a single-atom operator at slot `atom` (atom 0 varies slowest) and
// extends with identities over the other atoms and the oscillator.
Matrix embed_atom_op(const Matrix& op, int atom, int atom_count, int fock_cutoff) {
    Matrix out = Matrix::Identity(1, 1);
    for (int j = 0; j < atom_count; ++j) {
        out = kron(out, j == atom ? op : Matrix::Identity(2, 2));
    }
    return kron(out, Matrix::Identity(fock_cutoff, fock_cutoff));
}

Matrix fock_annihilation(int fock_cutoff) {
    Matrix a = Matrix::Zero(fock_cutoff, fock_cutoff);
    for (int n = 1; n < fock_cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Matrix sigma_minus_2x2() {
    Matrix s = Matrix::Zero(2, 2);
    s(0, 1) = 1.0;  // |g><e|
    return s;
}

Matrix sigma_z_2x2() {
    Matrix s = Matrix::Zero(2, 2);
    s(0, 0) = -1.0;
    s(1, 1) = 1.0;
    return s;
}

// Population of the top retained Fock level; the truncation sentinel.
double top_level_population(const Matrix& rho, int atom_count, int fock_cutoff) {
    double p = 0.0;
    const int atom_dim = 1 << atom_count;
    for (int b = 0; b < atom_dim; ++b) {
        const int idx = b * fock_cutoff + (fock_cutoff - 1);
        p += rho(idx, idx).real();
    }
    return p;
}

void check_truncation(const Matrix& rho, const SystemModel& model, double guard, double t) {
    const double p = top_level_population(rho, model.atom_count, model.fock_cutoff);
    if (p > guard) {
        std::ostringstream msg;
        msg << "population " << p << " in the top retained oscillator level at t = " << t
            << " s exceeds the guard " << guard << "; raise fock_cutoff";
        throw TruncationError(msg.str());
    }
}

void check_times(const std::vector<double>& times) {
    if (times.empty()) throw std::invalid_argument("need at least one sample time");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < 0.0) throw std::invalid_argument("sample times must be >= 0");
        if (i > 0 && times[i] <= times[i - 1]) {
            throw std::invalid_argument("sample times must be strictly increasing");
        }
    }
}

// Maximizes f on [a, b] by golden-section search.
double golden_max(const std::function<double(double)>& f, double a, double b, double tol) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

int SystemModel::dim() const { return (1 << atom_count) * fock_cutoff; }

void SystemModel::validate() const {
    if (atom_count < 1) throw std::domain_error("need at least one atom");
    if (atom_count > 4) throw std::domain_error("more than four atoms is not supported");
    if (fock_cutoff < 2) throw std::domain_error("oscillator needs at least two retained levels");
    if (couplings.size() != static_cast<std::size_t>(atom_count)) {
        throw std::domain_error("need one coupling per atom");
    }
    if (!detunings.empty() && detunings.size() != static_cast<std::size_t>(atom_count)) {
        throw std::domain_error("detunings must be empty or one per atom");
    }
    if (kappa < 0.0 || gamma_decay < 0.0 || gamma_phi < 0.0) {
        throw std::domain_error("decay rates must be >= 0");
    }
}

bool SystemModel::rwa_questionable() const {
    if (mode_frequency <= 0.0) return false;
    const double limit = 1e-2 * constants().hbar * mode_frequency;
    return std::any_of(couplings.begin(), couplings.end(),
                       [limit](double g) { return std::abs(g) > limit; });
}

void QuantumState::validate() const {
    if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
    if (rho.rows() != (1 << atom_count) * static_cast<Eigen::Index>(fock_cutoff)) {
        throw std::invalid_argument("density matrix size does not match atom_count and fock_cutoff");
    }
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-8 * std::max(1.0, rho.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument("density matrix is not hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-6 || std::abs(rho.trace().imag()) > 1e-8) {
        throw std::invalid_argument("density matrix trace must be 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (rho + rho.adjoint()),
                                                 Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-6) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
}

QuantumState QuantumState::product(int atom_count, int fock_cutoff, unsigned atom_bits,
                                   int photons) {
    if (atom_count < 1) throw std::domain_error("need at least one atom");
    if (photons < 0 || photons >= fock_cutoff) {
        throw std::domain_error("photon number must lie inside the retained levels");
    }
    if (atom_bits >= (1u << atom_count)) throw std::domain_error("atom bit pattern out of range");
    int atom_index = 0;
    for (int j = 0; j < atom_count; ++j) {
        if (atom_bits & (1u << j)) atom_index |= 1 << (atom_count - 1 - j);
    }
    const int dim = (1 << atom_count) * fock_cutoff;
    Vector psi = Vector::Zero(dim);
    psi(atom_index * fock_cutoff + photons) = 1.0;
    QuantumState state;
    state.rho = psi * psi.adjoint();
    state.atom_count = atom_count;
    state.fock_cutoff = fock_cutoff;
    return state;
}

const std::vector<double>& TimeSeries::series(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return values[i];
    }
    throw std::out_of_range("no observable named '" + name + "'");
}

Matrix annihilation_operator(const SystemModel& model) {
    model.validate();
    Matrix atoms = Matrix::Identity(1 << model.atom_count, 1 << model.atom_count);
    return kron(atoms, fock_annihilation(model.fock_cutoff));
}

Matrix lowering_operator(const SystemModel& model, int atom) {
    model.validate();
    if (atom < 0 || atom >= model.atom_count) throw std::domain_error("atom index out of range");
    return embed_atom_op(sigma_minus_2x2(), atom, model.atom_count, model.fock_cutoff);
}

Matrix sigma_z_operator(const SystemModel& model, int atom) {
    model.validate();
    if (atom < 0 || atom >= model.atom_count) throw std::domain_error("atom index out of range");
    return embed_atom_op(sigma_z_2x2(), atom, model.atom_count, model.fock_cutoff);
}

Matrix number_operator(const SystemModel& model) {
    const Matrix a = annihilation_operator(model);
    return a.adjoint() * a;
}

Matrix excited_projector(const SystemModel& model, int atom) {
    const Matrix sm = lowering_operator(model, atom);
    return sm.adjoint() * sm;
}

Matrix build_hamiltonian(const SystemModel& model) {
    model.validate();
    const double hbar = constants().hbar;
    const Matrix a = annihilation_operator(model);
    Matrix h = Matrix::Zero(model.dim(), model.dim());
    for (int j = 0; j < model.atom_count; ++j) {
        const Matrix sm = lowering_operator(model, j);
        const Matrix sp = sm.adjoint();
        const double delta = model.detunings.empty() ? 0.0 : model.detunings[j];
        h += hbar * delta * (sp * sm) + model.couplings[j] * (sp * a + sm * a.adjoint());
    }
    return h;
}

std::vector<QuantumState> evolve_unitary(const SystemModel& model, const QuantumState& initial,
                                         const std::vector<double>& times,
                                         const SolverOptions& options) {
    model.validate();
    check_times(times);
    if (initial.rho.rows() != model.dim()) {
        throw std::invalid_argument("initial state size does not match the model");
    }
    const Matrix h = build_hamiltonian(model);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    const Matrix& v = solver.eigenvectors();
    const Eigen::VectorXd& energies = solver.eigenvalues();
    const Matrix rho0 = v.adjoint() * initial.rho * v;
    const double hbar = constants().hbar;

    std::vector<QuantumState> out;
    out.reserve(times.size());
    for (double t : times) {
        Vector phase(energies.size());
        for (Eigen::Index k = 0; k < energies.size(); ++k) {
            phase(k) = std::exp(Complex(0.0, -energies(k) * t / hbar));
        }
        const Vector phase_conj = phase.conjugate();
        const Matrix rho_t =
            v * (phase.asDiagonal() * rho0 * phase_conj.asDiagonal()) * v.adjoint();
        check_truncation(rho_t, model, options.truncation_guard, t);
        QuantumState state;
        state.rho = 0.5 * (rho_t + rho_t.adjoint());
        state.atom_count = model.atom_count;
        state.fock_cutoff = model.fock_cutoff;
        out.push_back(std::move(state));
    }
    return out;
}

namespace {

// Right-hand side of the master equation on the flattened density matrix.
struct LindbladRhs {
    Matrix h_over_hbar;
    std::vector<Matrix> collapse;      // sqrt(rate) L
    std::vector<Matrix> collapse_sq;   // rate L^dag L
    int dim = 0;

    void operator()(const std::vector<Complex>& x, std::vector<Complex>& dxdt, double) const {
        Eigen::Map<const Matrix> rho(x.data(), dim, dim);
        Eigen::Map<Matrix> out(dxdt.data(), dim, dim);
        out = Complex(0.0, -1.0) * (h_over_hbar * rho - rho * h_over_hbar);
        for (std::size_t c = 0; c < collapse.size(); ++c) {
            out += collapse[c] * rho * collapse[c].adjoint() -
                   0.5 * (collapse_sq[c] * rho + rho * collapse_sq[c]);
        }
    }
};

LindbladRhs make_rhs(const SystemModel& model) {
    LindbladRhs rhs;
    rhs.dim = model.dim();
    rhs.h_over_hbar = build_hamiltonian(model) / constants().hbar;
    auto add = [&rhs](double rate, const Matrix& op) {
        if (rate <= 0.0) return;
        rhs.collapse.push_back(std::sqrt(rate) * op);
        rhs.collapse_sq.push_back(rate * (op.adjoint() * op));
    };
    add(model.kappa, annihilation_operator(model));
    for (int j = 0; j < model.atom_count; ++j) {
        add(model.gamma_decay, lowering_operator(model, j));
        add(model.gamma_phi / 2.0, sigma_z_operator(model, j));
    }
    return rhs;
}

}  // namespace

std::vector<QuantumState> evolve_lindblad(const SystemModel& model, const QuantumState& initial,
                                          const std::vector<double>& times,
                                          const SolverOptions& options) {
    namespace ode = boost::numeric::odeint;
    model.validate();
    check_times(times);
    if (initial.rho.rows() != model.dim()) {
        throw std::invalid_argument("initial state size does not match the model");
    }
    if (times.empty()) return {};

    const int dim = model.dim();
    const LindbladRhs rhs = make_rhs(model);

    std::vector<Complex> state(static_cast<std::size_t>(dim) * dim);
    Eigen::Map<Matrix>(state.data(), dim, dim) = initial.rho;

    // The integrator has to start where the initial condition lives (t = 0).
    std::vector<double> grid = times;
    bool drop_first = false;
    if (grid.front() > 0.0) {
        grid.insert(grid.begin(), 0.0);
        drop_first = true;
    }

    std::vector<QuantumState> out;
    out.reserve(times.size());
    std::size_t seen = 0;
    auto observer = [&](const std::vector<Complex>& x, double t) {
        ++seen;
        if (drop_first && seen == 1) return;
        Eigen::Map<const Matrix> rho(x.data(), dim, dim);
        check_truncation(rho, model, options.truncation_guard, t);
        QuantumState snapshot;
        snapshot.rho = 0.5 * (rho + Matrix(rho.adjoint()));
        snapshot.atom_count = model.atom_count;
        snapshot.fock_cutoff = model.fock_cutoff;
        out.push_back(std::move(snapshot));
    };

    using stepper_t = ode::runge_kutta_dopri5<std::vector<Complex>>;
    auto stepper = ode::make_dense_output(options.abs_tol, options.rel_tol, stepper_t());
    const double span = grid.back() - grid.front();
    const double dt0 = span > 0.0 ? span / 1000.0 : 1e-9;
    ode::integrate_times(stepper, rhs, state, grid.begin(), grid.end(), dt0, observer);
    return out;
}

TimeSeries sample_observables(const SystemModel& model, const QuantumState& initial,
                              const std::vector<double>& times,
                              const std::vector<std::pair<std::string, Matrix>>& extra,
                              const SolverOptions& options) {
    model.validate();
    const bool open = model.kappa > 0.0 || model.gamma_decay > 0.0 || model.gamma_phi > 0.0;
    const std::vector<QuantumState> states = open
                                                 ? evolve_lindblad(model, initial, times, options)
                                                 : evolve_unitary(model, initial, times, options);

    std::vector<std::pair<std::string, Matrix>> obs;
    obs.emplace_back("photon_number", number_operator(model));
    Matrix total = number_operator(model);
    for (int j = 0; j < model.atom_count; ++j) {
        obs.emplace_back("atom" + std::to_string(j) + "_excited", excited_projector(model, j));
        total += excited_projector(model, j);
    }
    obs.emplace_back("total_excitations", std::move(total));
    obs.insert(obs.end(), extra.begin(), extra.end());

    TimeSeries series;
    series.times = times;
    for (const auto& [name, op] : obs) {
        series.names.push_back(name);
        std::vector<double> column;
        column.reserve(states.size());
        for (const auto& st : states) column.push_back((op * st.rho).trace().real());
        series.values.push_back(std::move(column));
    }
    if (model.atom_count == 2) {
        series.names.push_back("concurrence");
        std::vector<double> column;
        column.reserve(states.size());
        for (const auto& st : states) column.push_back(concurrence(st));
        series.values.push_back(std::move(column));
    }
    return series;
}

double concurrence(const QuantumState& state) {
    if (state.atom_count != 2) throw std::domain_error("concurrence needs exactly two atoms");
    const int n = state.fock_cutoff;
    Matrix reduced = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Complex sum = 0.0;
            for (int k = 0; k < n; ++k) sum += state.rho(i * n + k, j * n + k);
            reduced(i, j) = sum;
        }
    }
    // Spin-flipped state sigma_y (x) sigma_y acting from both sides, with the
    // complex conjugate in between.
    Matrix yy = Matrix::Zero(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Matrix rho_tilde = yy * reduced.conjugate() * yy;
    Eigen::ComplexEigenSolver<Matrix> solver(reduced * rho_tilde);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    std::vector<double> roots;
    for (Eigen::Index k = 0; k < 4; ++k) {
        roots.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(k).real())));
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

TransferResult two_atom_transfer(const SystemModel& model, const SolverOptions& options) {
    model.validate();
    if (model.atom_count != 2) throw std::domain_error("transfer needs exactly two atoms");
    const double g_mean = 0.5 * (std::abs(model.couplings[0]) + std::abs(model.couplings[1]));
    if (g_mean <= 0.0) throw std::domain_error("transfer needs nonzero couplings");

    const double hbar = constants().hbar;
    // Resonant period of the virtual-photon exchange; the scan covers three.
    const double t_scale = kPi * hbar / (std::sqrt(2.0) * g_mean);
    const double t_max = 3.0 * t_scale;

    const QuantumState initial = QuantumState::product(2, model.fock_cutoff, 0b01u, 0);
    const Matrix target = excited_projector(model, 1);

    const bool open = model.kappa > 0.0 || model.gamma_decay > 0.0 || model.gamma_phi > 0.0;
    TransferResult result;
    if (!open) {
        const Matrix h = build_hamiltonian(model);
        Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
        const Matrix& v = solver.eigenvectors();
        const Eigen::VectorXd& energies = solver.eigenvalues();
        Vector psi0 = Vector::Zero(model.dim());
        psi0(2 * model.fock_cutoff + 0) = 1.0;  // |eg,0>: atom block 0b10, atom A slowest
        const Vector coeff = v.adjoint() * psi0;
        auto population = [&](double t) {
            Vector psi = Vector::Zero(model.dim());
            for (Eigen::Index k = 0; k < energies.size(); ++k) {
                psi += coeff(k) * std::exp(Complex(0.0, -energies(k) * t / hbar)) * v.col(k);
            }
            return (psi.adjoint() * target * psi)(0, 0).real();
        };
        // Stop at the first hand-off peak: later exchange cycles revisit the
        // same maximum and must not win the scan on rounding noise.
        const int steps = 4000;
        int best = 0;
        double best_p = population(0.0);
        for (int i = 1; i <= steps; ++i) {
            const double p = population(t_max * i / steps);
            if (p > best_p) {
                best_p = p;
                best = i;
            } else if (best > 0 && p < best_p - 1e-9) {
                break;
            }
        }
        const double lo = t_max * std::max(0, best - 1) / steps;
        const double hi = t_max * std::min(steps, best + 1) / steps;
        result.transfer_time = golden_max(population, lo, hi, t_scale * 1e-12);
        result.fidelity = population(result.transfer_time);
        return result;
    }

    // Lossy path: sample, then resample tightly around the best point.
    auto scan = [&](double lo, double hi, int count) {
        std::vector<double> ts;
        ts.reserve(count);
        for (int i = 0; i < count; ++i) ts.push_back(lo + (hi - lo) * (i + 1) / count);
        const std::vector<QuantumState> states = evolve_lindblad(model, initial, ts, options);
        int best = 0;
        double best_p = -1.0;
        for (std::size_t i = 0; i < states.size(); ++i) {
            const double p = (target * states[i].rho).trace().real();
            if (p > best_p) {
                best_p = p;
                best = static_cast<int>(i);
            }
        }
        return std::tuple<double, double, double>(
            ts[static_cast<std::size_t>(std::max(0, best - 1))], ts[best],
            ts[static_cast<std::size_t>(
                std::min(static_cast<int>(ts.size()) - 1, best + 1))]);
    };
    auto [lo, mid, hi] = scan(0.0, t_max, 1200);
    auto [lo2, mid2, hi2] = scan(lo, hi, 200);
    (void)lo2;
    (void)hi2;
    result.transfer_time = mid2;
    const std::vector<QuantumState> final_state =
        evolve_lindblad(model, initial, {mid2}, options);
    result.fidelity = (target * final_state.front().rho).trace().real();
    return result;
}

}  // namespace rydline::dynamics
