#pragma once

#include "gauge2d/fieldelem.hpp"

#include <memory>
#include <mutex>
#include <map>
#include <vector>

namespace gauge2d {

class CartanSystem;
using SystemPtr = std::shared_ptr<const CartanSystem>;

// A 2D evolutionary system in normal form:
//
//   d phi^i    = Z^i   (one entry per field; may involve phi, dbar-jets of
//                       the unconstrained fields, and d/dbar-jets of lambda)
//   dbar phi^J = Z^J   (one entry per constrained field; no lambda content)
//
// n fields total, m of them constrained, l lambda fields.  The class is
// immutable after construction; construction rejects entries that violate
// the shape restrictions above.
class CartanSystem {
public:
    struct Field {
        std::string name;
        bool constrained = false;
    };

    static SystemPtr create(std::vector<Field> fields,
                            std::vector<std::string> lambdas,
                            std::vector<std::string> params,
                            std::vector<FieldElem> z_evolution,
                            std::vector<FieldElem> z_constraint);

    int n() const { return static_cast<int>(fields_.size()); }
    int m() const { return static_cast<int>(constrained_.size()); }
    int l() const { return static_cast<int>(lambdas_.size()); }

    const std::vector<Field>& fields() const { return fields_; }
    const std::vector<std::string>& lambdas() const { return lambdas_; }
    const std::vector<std::string>& params() const { return params_; }

    // Conversions between global field indices and per-kind jet indices.
    int global_index(JetKind kind, int index) const;
    JetCoord field_coordinate(int global) const;
    bool is_constrained(int global) const { return fields_[global].constrained; }

    const FieldElem& z_evolution(int global) const { return z_evolution_[global]; }
    const FieldElem& z_constraint(int j) const { return z_constraint_[j]; }

    // Largest derivative orders appearing across all right-hand sides.
    int max_lambda_d_order() const { return max_lambda_p_; }
    int max_jet_dbar_order() const { return max_q_; }

    // Rendering names for jet coordinates.
    const std::string& coord_name(JetKind kind, int index) const;

    // Fix one parameter to a rational constant; the parameter disappears
    // from the resulting system.
    SystemPtr substituted(const std::string& param, const Rat& value) const;

private:
    CartanSystem() = default;
    friend const FieldElem& cached_a_jet_dtime(const CartanSystem&, int, int);

    std::vector<Field> fields_;
    std::vector<std::string> lambdas_;
    std::vector<std::string> params_;
    std::vector<FieldElem> z_evolution_;
    std::vector<FieldElem> z_constraint_;
    std::vector<int> constrained_;   // J -> global index
    std::vector<int> unconstrained_; // a -> global index
    std::vector<int> kind_index_;    // global -> index within its kind
    int max_lambda_p_ = 0;
    int max_q_ = 0;

    // d(dbar^q phi^a) is the q-fold dbar of Z^a; memoized because the
    // stabilization loop asks for the same entries over and over.
    mutable std::map<std::pair<int, int>, FieldElem> dtime_cache_;
    mutable std::mutex cache_mutex_;
};

// Throws ValidationError unless the jet is admissible and within range.
void check_jet_in_system(const JetCoord& j, const CartanSystem& sys);

} // namespace gauge2d
