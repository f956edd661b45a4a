#include "jamming/frames.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "jamming/rng.hpp"

namespace jamming {

namespace {

constexpr double kPi = std::numbers::pi;

Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

void check_unit_norms(const Frame& frame, double tol, const char* what) {
    for (int c = 0; c < frame.n; ++c) {
        if (std::abs(frame.vectors.col(c).norm() - 1.0) > tol) {
            throw ValidationError(std::string(what) + ": vector " +
                                  std::to_string(c) + " is not unit norm");
        }
    }
}

void check_equiangular(const Frame& frame, double target_sq, double tol,
                       const char* what) {
    for (int a = 0; a < frame.n; ++a) {
        for (int b = a + 1; b < frame.n; ++b) {
            double overlap_sq =
                std::norm(frame.vectors.col(a).dot(frame.vectors.col(b)));
            if (std::abs(overlap_sq - target_sq) > tol) {
                throw ValidationError(std::string(what) +
                                      ": equiangularity violated at pair (" +
                                      std::to_string(a) + "," + std::to_string(b) +
                                      ")");
            }
        }
    }
}

}  // namespace

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

Frame harmonic_frame(int n, int d) {
    if (d < 1 || n < d) throw std::invalid_argument("harmonic_frame requires n >= d >= 1");
    Frame f{n, d, ComplexMatrix(d, n), "harmonic"};
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int c = 0; c < n; ++c) {
        for (int j = 0; j < d; ++j) {
            f.vectors(j, c) = norm * unit_phase(2.0 * kPi * c * j / n);
        }
    }
    return f;
}

Frame simplex_frame(int d) {
    if (d < 2) throw std::invalid_argument("simplex_frame requires d >= 2");
    const int n = d + 1;
    // Vertices in R^{d+1}: sqrt((d+1)/d) (e_j - 1/(d+1) * ones).
    Eigen::MatrixXd verts(n, n);
    const double scale = std::sqrt(static_cast<double>(n) / d);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            verts(i, j) = scale * ((i == j ? 1.0 : 0.0) - 1.0 / n);
        }
    }
    // Householder reflection sending the normalized all-ones vector to e_0;
    // coordinates 1..d of the image then live in the hyperplane 1^perp.
    Eigen::VectorXd w = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
    w(0) -= 1.0;
    Eigen::MatrixXd house =
        Eigen::MatrixXd::Identity(n, n) - 2.0 / w.squaredNorm() * w * w.transpose();
    Eigen::MatrixXd reduced = (house * verts).bottomRows(d);

    Frame f{n, d, reduced.cast<Complex>(), "simplex"};
    check_unit_norms(f, 1e-9, "simplex_frame");
    return f;
}

Frame sic_frame(int d) {
    Frame f;
    if (d == 2) {
        // Regular tetrahedron on the Bloch sphere.
        f = Frame{4, 2, ComplexMatrix(2, 4), "sic"};
        f.vectors.col(0) << 1.0, 0.0;
        const double a = 1.0 / std::sqrt(3.0);
        const double b = std::sqrt(2.0 / 3.0);
        for (int k = 0; k < 3; ++k) {
            f.vectors.col(k + 1) << a, b * unit_phase(2.0 * kPi * k / 3.0);
        }
    } else if (d == 3) {
        // Weyl-Heisenberg orbit of the fiducial (0, 1, -1)/sqrt(2).
        ComplexVector fid(3);
        fid << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
        f = Frame{9, 3, ComplexMatrix(3, 9), "sic"};
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                ComplexVector v(3);
                for (int j = 0; j < 3; ++j) {
                    // (X^a Z^b fid)_j = omega^{b (j - a)} fid_{j - a}
                    int src = ((j - a) % 3 + 3) % 3;
                    v(j) = unit_phase(2.0 * kPi * b * src / 3.0) * fid(src);
                }
                f.vectors.col(3 * a + b) = v;
            }
        }
    } else {
        throw UnsupportedDimension(
            "sic_frame supports d in {2, 3}; use load_frame for other dimensions");
    }
    check_unit_norms(f, 1e-9, "sic_frame");
    check_equiangular(f, 1.0 / (d + 1), 1e-9, "sic_frame");
    return f;
}

namespace {

// Two-qubit Pauli operators for the d = 4 MUB construction.
Eigen::Matrix2cd pauli(char p) {
    Eigen::Matrix2cd m;
    const Complex i(0.0, 1.0);
    switch (p) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, -i, i, 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw std::logic_error("bad Pauli label");
    }
    return m;
}

Eigen::Matrix4cd pauli_pair(char p, char q) {
    Eigen::Matrix4cd out;
    Eigen::Matrix2cd a = pauli(p), b = pauli(q);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

// Common eigenbasis of a commuting pair of two-qubit Paulis: A + 2B has four
// distinct eigenvalues, so its eigenvectors are the joint basis.
ComplexMatrix joint_eigenbasis(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(a + 2.0 * b);
    return solver.eigenvectors();
}

Frame mub_frame_dim4() {
    // The five maximal commuting classes of two-qubit Paulis; each class's
    // common eigenbasis gives one basis of the MUB set.
    Frame f{20, 4, ComplexMatrix(4, 20), "mub"};
    f.vectors.leftCols(4) = ComplexMatrix::Identity(4, 4);
    const std::pair<const char*, const char*> classes[4] = {
        {"XI", "IX"}, {"YI", "IY"}, {"XY", "YZ"}, {"XZ", "YX"}};
    for (int m = 0; m < 4; ++m) {
        auto [pa, pb] = classes[m];
        f.vectors.middleCols(4 * (m + 1), 4) =
            joint_eigenbasis(pauli_pair(pa[0], pa[1]), pauli_pair(pb[0], pb[1]));
    }
    return f;
}

}  // namespace

Frame mub_frame(int d) {
    Frame f;
    if (d == 2) {
        // The three single-qubit Pauli eigenbases.
        f = Frame{6, 2, ComplexMatrix(2, 6), "mub"};
        const double s = 1.0 / std::sqrt(2.0);
        const Complex i(0.0, 1.0);
        f.vectors.col(0) << 1, 0;
        f.vectors.col(1) << 0, 1;
        f.vectors.col(2) << s, s;
        f.vectors.col(3) << s, -s;
        f.vectors.col(4) << s, s * i;
        f.vectors.col(5) << s, -s * i;
    } else if (is_prime(d)) {
        // Computational basis plus d quadratic-phase bases.
        const int n = d * (d + 1);
        f = Frame{n, d, ComplexMatrix(d, n), "mub"};
        f.vectors.leftCols(d) = ComplexMatrix::Identity(d, d);
        const double norm = 1.0 / std::sqrt(static_cast<double>(d));
        for (int m = 0; m < d; ++m) {
            for (int r = 0; r < d; ++r) {
                for (int j = 0; j < d; ++j) {
                    double phase = 2.0 * kPi * (m * j * j + r * j) / d;
                    f.vectors(j, d * (m + 1) + r) = norm * unit_phase(phase);
                }
            }
        }
    } else if (d == 4) {
        f = mub_frame_dim4();
    } else {
        throw UnsupportedDimension("mub_frame supports prime d and d = 4");
    }

    check_unit_norms(f, 1e-9, "mub_frame");
    // Validate the two-level overlap structure.
    for (int a = 0; a < f.n; ++a) {
        for (int b = a + 1; b < f.n; ++b) {
            double overlap_sq = std::norm(f.vectors.col(a).dot(f.vectors.col(b)));
            double target = (a / d == b / d) ? 0.0 : 1.0 / d;
            if (std::abs(overlap_sq - target) > 1e-9) {
                throw ValidationError("mub_frame: unbiasedness violated at pair (" +
                                      std::to_string(a) + "," + std::to_string(b) + ")");
            }
        }
    }
    return f;
}

Frame alltop_frame(int n, int d) {
    if (!is_prime(n) || n < 5) throw NotPrime("alltop_frame requires prime n >= 5");
    if (d < 1 || d > n) throw std::invalid_argument("alltop_frame requires 1 <= d <= n");
    Frame f{n, d, ComplexMatrix(d, n), "alltop"};
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int c = 0; c < n; ++c) {
        for (int j = 0; j < d; ++j) {
            long long cube = static_cast<long long>(j) * j * j % n;
            double phase = 2.0 * kPi * ((static_cast<long long>(c) * cube) % n) / n;
            f.vectors(j, c) = norm * unit_phase(phase);
        }
    }
    return f;
}

Frame random_haar_frame(int n, int d, std::uint64_t seed) {
    if (d < 1 || n < d) throw std::invalid_argument("random_haar_frame requires n >= d >= 1");
    Frame f{n, d, ComplexMatrix(d, n), "random"};
    for (int c = 0; c < n; ++c) {
        auto rng = stream_rng(seed, static_cast<std::uint64_t>(c));
        std::normal_distribution<double> gauss;
        ComplexVector v(d);
        for (int j = 0; j < d; ++j) {
            double re = gauss(rng);
            double im = gauss(rng);
            v(j) = Complex(re, im);
        }
        f.vectors.col(c) = v / v.norm();
    }
    return f;
}

double coherence(const Frame& frame) {
    if (frame.n < 2) throw std::invalid_argument("coherence requires n >= 2");
    double best = 0.0;
    for (int a = 0; a < frame.n; ++a) {
        for (int b = a + 1; b < frame.n; ++b) {
            best = std::max(best, std::abs(frame.vectors.col(a).dot(frame.vectors.col(b))));
        }
    }
    return best;
}

double welch_bound_sq(int n, int d) {
    return static_cast<double>(n - d) / (static_cast<double>(d) * (n - 1));
}

Frame load_frame(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open frame file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("frame file " + path + ": " + e.what());
    }
    if (!j.contains("n") || !j.contains("d") || !j.contains("vectors")) {
        throw ParseError("frame file " + path + ": missing n, d or vectors");
    }
    Frame f;
    f.n = j["n"].get<int>();
    f.d = j["d"].get<int>();
    f.label = j.value("label", std::string("file"));
    if (f.d < 1 || f.n < f.d) throw ValidationError("frame file: requires n >= d >= 1");
    if (static_cast<int>(j["vectors"].size()) != f.n) {
        throw ParseError("frame file: expected " + std::to_string(f.n) + " vectors");
    }
    f.vectors.resize(f.d, f.n);
    for (int c = 0; c < f.n; ++c) {
        const auto& vec = j["vectors"][c];
        if (static_cast<int>(vec.size()) != f.d) {
            throw ParseError("frame file: vector " + std::to_string(c) +
                             " has wrong dimension");
        }
        for (int i = 0; i < f.d; ++i) {
            const auto& entry = vec[i];
            if (!entry.is_array() || entry.size() != 2) {
                throw ParseError("frame file: entry (" + std::to_string(c) + "," +
                                 std::to_string(i) + ") must be [re, im]");
            }
            f.vectors(i, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    check_unit_norms(f, 1e-9, "load_frame");
    return f;
}

void save_frame(const Frame& frame, const std::string& path) {
    nlohmann::json j;
    j["n"] = frame.n;
    j["d"] = frame.d;
    j["label"] = frame.label;
    auto vectors = nlohmann::json::array();
    for (int c = 0; c < frame.n; ++c) {
        auto vec = nlohmann::json::array();
        for (int i = 0; i < frame.d; ++i) {
            vec.push_back({frame.vectors(i, c).real(), frame.vectors(i, c).imag()});
        }
        vectors.push_back(vec);
    }
    j["vectors"] = vectors;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write frame file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace jamming
