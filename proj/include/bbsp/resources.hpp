#pragma once

#include <map>
#include <vector>

#include "bbsp/oracles.hpp"
#include "bbsp/stateprep.hpp"

namespace bbsp {

// Published Toffoli counts of the best arcsine circuits, keyed by n.
const std::map<int, long long>& arcsine_toffoli_table();

struct CostModel {
    int n = 0;
    int d = 0;
    double norm1 = 0.0;  // sum of codes / 2^n
    double norm2 = 0.0;  // Euclidean norm of codes / 2^n
};

CostModel make_cost_model(const QuantizedSpec& spec);

struct ToffoliPrediction {
    double leading = 0.0;
    // Width of the band the simulated count may sit in around `leading`:
    // 2n for round-count rounding, plus the unif inverse cost for root.
    double slack = 0.0;
};

// Linear: (pi/2) n sqrt(D) / |alpha|_2. Root: (pi/2) n sqrt(D / |alpha|_1).
// D is the padded label count.
double predicted_total_toffoli(const CostModel& model, Problem problem);
ToffoliPrediction predict_toffoli(const CostModel& model, Problem problem, int fpaa_length = 0);

struct ImprovementRow {
    int n = 0;
    long long comp_toffolis = 0;
    long long arcsine_toffolis = 0;
    long long factor = 0;
};

std::vector<ImprovementRow> improvement_table();

}  // namespace bbsp
