#include "bbsp/resources.hpp"

#include <cmath>
#include <numbers>

#include "bbsp/circuits.hpp"
#include "bbsp/config.hpp"

namespace bbsp {

const std::map<int, long long>& arcsine_toffoli_table() {
    static const std::map<int, long long> table = {{17, 4872}, {23, 7784}, {30, 11264}};
    return table;
}

CostModel make_cost_model(const QuantizedSpec& spec) {
    CostModel m{spec.n, spec.d, 0.0, 0.0};
    const double scale = std::ldexp(1.0, -spec.n);
    for (const FixedPointCode& c : spec.first) {
        const double v = c.magnitude * scale;
        m.norm1 += v;
        m.norm2 += v * v;
    }
    m.norm2 = std::sqrt(m.norm2);
    return m;
}

double predicted_total_toffoli(const CostModel& model, Problem problem) {
    const double dim = padded_dimension(model.d);
    const double lead = std::numbers::pi / 2 * model.n;
    if (problem == Problem::root || problem == Problem::polar_root) {
        if (!(model.norm1 > 0)) throw DegenerateError("zero 1-norm");
        return lead * std::sqrt(dim / model.norm1);
    }
    if (!(model.norm2 > 0)) throw DegenerateError("zero 2-norm");
    return lead * std::sqrt(dim) / model.norm2;
}

ToffoliPrediction predict_toffoli(const CostModel& model, Problem problem, int fpaa_length) {
    ToffoliPrediction p{predicted_total_toffoli(model, problem), 2.0 * model.n};
    // unif inverse: L unif' legs, each one comparator plus the controlled-H layer.
    if (problem == Problem::root || problem == Problem::polar_root)
        p.slack += 2.0 * model.n + fpaa_length * (comparator_toffolis(ComparatorBackend::circuit, model.n) + model.n);
    return p;
}

std::vector<ImprovementRow> improvement_table() {
    std::vector<ImprovementRow> rows;
    for (auto [n, arcsine] : arcsine_toffoli_table()) {
        const long long comp = comparator_toffolis(ComparatorBackend::circuit, n);
        rows.push_back({n, comp, arcsine, arcsine / comp});
    }
    return rows;
}

}  // namespace bbsp
