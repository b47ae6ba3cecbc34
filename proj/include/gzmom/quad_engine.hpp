#pragma once

#include <cstddef>
#include <span>
#include <thread>
#include <vector>

#include "gzmom/gauss_legendre.hpp"
#include "gzmom/real.hpp"

// Composite Gauss-Legendre integration over an explicit panel list.
// Each panel's partial sum is computed serially in node order; panels are
// distributed over worker threads and the final reduction runs in panel
// order with compensated summation, so the result is bit-identical for any
// thread count.

namespace gzmom {

struct Panel {
    Real a;
    Real b;
};

/// [from, to] cut into panels of at most `width`; the last panel is clipped.
inline std::vector<Panel> uniform_panels(const Real& from, const Real& to, const Real& width) {
    std::vector<Panel> out;
    Real a = from;
    while (a < to) {
        Real b = a + width;
        if (b > to) b = to;
        out.push_back({a, b});
        a = b;
    }
    return out;
}

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace detail {

struct NeumaierSum {
    Real sum{0};
    Real comp{0};
    void add(const Real& x) {
        Real t = sum + x;
        if (abs(sum) >= abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    Real value() const { return sum + comp; }
};

}  // namespace detail

/// Integrate `n_comp` components at once: f(x, out) must fill out[0..n_comp).
/// Sharing one call per node lets several integrands reuse an expensive
/// common factor. Returns one integral per component.
template <class F>
std::vector<Real> integrate_panels(const std::vector<Panel>& panels, unsigned order,
                                   unsigned threads, std::size_t n_comp, F&& f) {
    const GlRule& rule = gl_rule(order);
    const std::size_t P = panels.size();
    std::vector<std::vector<Real>> partial(P, std::vector<Real>(n_comp, Real(0)));

    auto run_panel = [&](std::size_t p) {
        const Real half = (panels[p].b - panels[p].a) / 2;
        const Real mid = (panels[p].b + panels[p].a) / 2;
        std::vector<Real> vals(n_comp);
        for (unsigned i = 0; i < order; ++i) {
            Real x = mid + half * rule.nodes[i];
            f(x, std::span<Real>(vals));
            for (std::size_t c = 0; c < n_comp; ++c)
                partial[p][c] += rule.weights[i] * vals[c];
        }
        for (std::size_t c = 0; c < n_comp; ++c) partial[p][c] *= half;
    };

    const unsigned T = std::min<std::size_t>(resolve_threads(threads), P ? P : 1);
    if (T <= 1) {
        for (std::size_t p = 0; p < P; ++p) run_panel(p);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(T);
        for (unsigned t = 0; t < T; ++t) {
            workers.emplace_back([&, t] {
                for (std::size_t p = t; p < P; p += T) run_panel(p);
                mpfr_free_cache();  // MPFR keeps thread-local constant caches
            });
        }
        for (auto& w : workers) w.join();
    }

    std::vector<Real> out(n_comp, Real(0));
    for (std::size_t c = 0; c < n_comp; ++c) {
        detail::NeumaierSum acc;
        for (std::size_t p = 0; p < P; ++p) acc.add(partial[p][c]);
        out[c] = acc.value();
    }
    return out;
}

/// Single-component convenience wrapper.
template <class F>
Real integrate_panels_scalar(const std::vector<Panel>& panels, unsigned order,
                             unsigned threads, F&& f) {
    auto r = integrate_panels(panels, order, threads, 1,
                              [&](const Real& x, std::span<Real> out) { out[0] = f(x); });
    return r[0];
}

}  // namespace gzmom
