#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hct/catalog.hpp"

namespace hct {

struct RuleBase {
    std::string pair;
    std::map<std::string, double> params;
    double tol = 0.0;  // 0: the rule's tolerance
};

struct RuleInstance {
    CDNumber p;
    CDNumber zeta;
    CDNumber h;                       // direction for image-derivative rules
    std::map<std::string, double> a;  // scalar parameters (alpha, tau, b, rho, ...)
    std::string aux;                  // second pair of a convolution
    std::map<std::string, double> aux_params;
    int variant = 0;  // which form of a two-form theorem
};

using PointFn = std::function<CDNumber(const CDNumber& p)>;

struct OperationalRule {
    std::string name;
    std::string provenance;
    std::string statement;
    PairDomain domain = PairDomain::OneSided;
    double tol = 1e-6;
    std::vector<RuleBase> bases;
    std::function<RuleInstance(const TransformPair& base, std::mt19937_64& rng, int k)> make_instance;
    // Empty string when the instance satisfies the theorem's hypotheses, else the reason it does not.
    std::function<std::string(const TransformPair& base, const RuleInstance& inst)> hypothesis;
    std::function<PointFn(const TransformPair& base, const RuleInstance& inst)> lhs;
    std::function<PointFn(const TransformPair& base, const RuleInstance& inst)> rhs;
};

const std::vector<OperationalRule>& rule_list();
std::vector<std::string> rule_names();
const OperationalRule& rule_lookup(const std::string& name);

CheckRecord check_rule_instance(const OperationalRule& rule, const TransformPair& base, const RuleInstance& inst,
                                double tol);
// Seeded instances of one rule on one base pair.
std::vector<CheckRecord> verify_rule(const OperationalRule& rule, const TransformPair& base, int instances,
                                     std::uint64_t seed, double tol);
// All declared base pairs of the rule.
std::vector<CheckRecord> verify_rule_bases(const OperationalRule& rule, int instances, std::uint64_t seed, double tol);

// Ridders' extrapolated central difference of g at 0.
CDNumber ridders_derivative(const std::function<CDNumber(double)>& g, double h0, double* err = nullptr);

}  // namespace hct
