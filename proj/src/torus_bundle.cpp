#include "prequant/torus_bundle.hpp"

#include <cmath>
#include <stdexcept>

namespace prequant {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

TorusModuliPoint gaugeAction(const GaugeCharacter& c, const TorusModuliPoint& p) {
    if (c.weyl != 1 && c.weyl != -1) throw std::invalid_argument("gaugeAction: weyl must be +-1");
    double s = static_cast<double>(c.weyl);
    return {s * p.a + c.m, s * p.b + c.n};
}

GaugeCharacter compose(const GaugeCharacter& first, const GaugeCharacter& second) {
    GaugeCharacter out;
    out.weyl = first.weyl * second.weyl;
    out.m = first.m + first.weyl * second.m;
    out.n = first.n + first.weyl * second.n;
    return out;
}

CSField::CSField(int nt, int nx, int ny) : nt_(nt), nx_(nx), ny_(ny) {
    if (nt < 1 || nx < 1 || ny < 1) throw std::invalid_argument("CSField: grid sizes must be positive");
    data_.assign(static_cast<std::size_t>(3) * nt * nx * ny, Su2Vector::Zero());
}

Su2Vector& CSField::at(int comp, int it, int ix, int iy) {
    return data_[((static_cast<std::size_t>(comp) * nt_ + it) * nx_ + ix) * ny_ + iy];
}

const Su2Vector& CSField::at(int comp, int it, int ix, int iy) const {
    return data_[((static_cast<std::size_t>(comp) * nt_ + it) * nx_ + ix) * ny_ + iy];
}

double CSField::tCoord(int it) const { return (it + 0.5) / nt_; }
double CSField::xCoord(int ix) const { return kTwoPi * ix / nx_; }
double CSField::yCoord(int iy) const { return kTwoPi * iy / ny_; }

CSField CSField::sample(int nt, int nx, int ny,
                        const std::function<std::array<Su2Vector, 3>(double, double, double)>& f) {
    CSField field(nt, nx, ny);
    for (int it = 0; it < nt; ++it) {
        for (int ix = 0; ix < nx; ++ix) {
            for (int iy = 0; iy < ny; ++iy) {
                auto v = f(field.tCoord(it), field.xCoord(ix), field.yCoord(iy));
                for (int c = 0; c < 3; ++c) field.at(c, it, ix, iy) = v[c];
            }
        }
    }
    return field;
}

double csFunctional(const CSField& f) {
    const int nt = f.nt(), nx = f.nx(), ny = f.ny();
    if (nt < 8 || nx < 8 || ny < 8) {
        throw std::invalid_argument("csFunctional: grid sizes must be >= 8");
    }
    const double dt = 1.0 / nt;
    const double dx = kTwoPi / nx;
    const double dy = kTwoPi / ny;

    // d/dt by centered differences, one-sided at the two boundary layers
    auto ddt = [&](int comp, int it, int ix, int iy) -> Su2Vector {
        if (it == 0) return (f.at(comp, 1, ix, iy) - f.at(comp, 0, ix, iy)) / dt;
        if (it == nt - 1) return (f.at(comp, nt - 1, ix, iy) - f.at(comp, nt - 2, ix, iy)) / dt;
        return (f.at(comp, it + 1, ix, iy) - f.at(comp, it - 1, ix, iy)) / (2.0 * dt);
    };
    auto ddx = [&](int comp, int it, int ix, int iy) -> Su2Vector {
        return (f.at(comp, it, (ix + 1) % nx, iy) - f.at(comp, it, (ix + nx - 1) % nx, iy)) /
               (2.0 * dx);
    };
    auto ddy = [&](int comp, int it, int ix, int iy) -> Su2Vector {
        return (f.at(comp, it, ix, (iy + 1) % ny) - f.at(comp, it, ix, (iy + ny - 1) % ny)) /
               (2.0 * dy);
    };

    double sum = 0.0;
    for (int it = 0; it < nt; ++it) {
        for (int ix = 0; ix < nx; ++ix) {
            for (int iy = 0; iy < ny; ++iy) {
                const Su2Vector& at = f.at(0, it, ix, iy);
                const Su2Vector& ax = f.at(1, it, ix, iy);
                const Su2Vector& ay = f.at(2, it, ix, iy);
                // dt dx dy coefficient of Tr(A dA):
                //   Tr(A_t (dx A_y - dy A_x)) - Tr(A_x (dt A_y - dy A_t))
                //   + Tr(A_y (dt A_x - dx A_t))
                double trAdA =
                    traceForm(at, ddx(2, it, ix, iy) - ddy(1, it, ix, iy)) -
                    traceForm(ax, ddt(2, it, ix, iy) - ddy(0, it, ix, iy)) +
                    traceForm(ay, ddt(1, it, ix, iy) - ddx(0, it, ix, iy));
                // (2/3) Tr(A^3) has dt dx dy coefficient 2 Tr(A_t [A_x, A_y])
                double trA3 = 2.0 * traceForm(at, lieBracket(ax, ay));
                sum += trAdA + trA3;
            }
        }
    }
    return sum * dt * dx * dy / (4.0 * M_PI);
}

CSField gaugeInterpolationField(const TorusModuliPoint& p, const GaugeCharacter& c, int nt,
                                int nx, int ny) {
    if (c.weyl != +1) {
        throw std::invalid_argument("gaugeInterpolationField: Weyl-flagged characters have no "
                                    "abelian interpolation slab");
    }
    CSField field(nt, nx, ny);
    const Su2Vector x = basisX();
    for (int it = 0; it < nt; ++it) {
        double t = field.tCoord(it);
        Su2Vector axv = (p.a + t * c.m) * x;
        Su2Vector ayv = (p.b + t * c.n) * x;
        for (int ix = 0; ix < nx; ++ix) {
            for (int iy = 0; iy < ny; ++iy) {
                field.at(1, it, ix, iy) = axv;
                field.at(2, it, ix, iy) = ayv;
            }
        }
    }
    return field;
}

std::complex<double> cocycleNumeric(const TorusModuliPoint& p, const GaugeCharacter& c, int nt,
                                    int nx, int ny) {
    double cs = csFunctional(gaugeInterpolationField(p, c, nt, nx, ny));
    return std::polar(1.0, cs);
}

std::complex<double> cocycleExact(const TorusModuliPoint& p, const GaugeCharacter& c) {
    if (c.weyl != +1) {
        throw std::invalid_argument("cocycleExact: closed form covers translations only");
    }
    return std::polar(1.0, -kTwoPi * (c.m * p.b - c.n * p.a));
}

std::array<std::complex<double>, 2> connectionForm(const TorusModuliPoint& p) {
    return {std::complex<double>(0.0, kTwoPi * p.b), std::complex<double>(0.0, -kTwoPi * p.a)};
}

LinePath makePath(std::initializer_list<TorusModuliPoint> pts) {
    LinePath path{std::vector<TorusModuliPoint>(pts)};
    if (path.points.size() < 2) throw std::invalid_argument("makePath: need at least two points");
    for (std::size_t i = 1; i < path.points.size(); ++i) {
        if (path.points[i].a == path.points[i - 1].a && path.points[i].b == path.points[i - 1].b) {
            throw std::invalid_argument("makePath: consecutive points must differ");
        }
    }
    return path;
}

LinePath rectanglePath(double a0, double b0, double a1, double b1) {
    return makePath({{a0, b0}, {a1, b0}, {a1, b1}, {a0, b1}, {a0, b0}});
}

std::complex<double> parallelTransport(const LinePath& path) {
    if (path.points.size() < 2) throw std::invalid_argument("parallelTransport: empty path");
    // Int_seg omega = -2 pi i (a0 b1 - a1 b0) exactly on a line segment, so
    // transport = exp(-Int omega) multiplies exp(+2 pi i (a0 b1 - a1 b0)).
    double area2 = 0.0;
    for (std::size_t i = 1; i < path.points.size(); ++i) {
        const TorusModuliPoint& p = path.points[i - 1];
        const TorusModuliPoint& q = path.points[i];
        area2 += p.a * q.b - q.a * p.b;
    }
    return std::polar(1.0, kTwoPi * area2);
}

double equivarianceCheck(const LinePath& path, const GaugeCharacter& c) {
    LinePath image;
    image.points.reserve(path.points.size());
    for (const TorusModuliPoint& p : path.points) image.points.push_back(gaugeAction(c, p));

    auto flip = [&](const TorusModuliPoint& p) -> TorusModuliPoint {
        return c.weyl == -1 ? TorusModuliPoint{-p.a, -p.b} : p;
    };
    GaugeCharacter translation{c.m, c.n, +1};
    std::complex<double> thetaStart = cocycleExact(flip(path.points.front()), translation);
    std::complex<double> thetaEnd = cocycleExact(flip(path.points.back()), translation);

    return std::abs(parallelTransport(image) * thetaEnd - thetaStart * parallelTransport(path));
}

}  // namespace prequant
