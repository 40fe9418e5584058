#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twodist/configurations.hpp"
#include "twodist/plane_graph.hpp"

namespace twodist {

/// Exact charge in units of 1/45 (every discharging amount is a multiple).
class Charge {
public:
    static constexpr std::int64_t kDenominator = 45;

    constexpr Charge() = default;
    static constexpr Charge whole(std::int64_t n) { return Charge(n * kDenominator); }
    static constexpr Charge units(std::int64_t n) { return Charge(n); }  // n / 45

    constexpr std::int64_t numerator() const { return units_; }
    constexpr bool is_integer() const { return units_ % kDenominator == 0; }

    constexpr Charge operator+(Charge o) const { return Charge(units_ + o.units_); }
    constexpr Charge operator-(Charge o) const { return Charge(units_ - o.units_); }
    constexpr Charge operator-() const { return Charge(-units_); }
    constexpr Charge& operator+=(Charge o) { units_ += o.units_; return *this; }
    constexpr Charge& operator-=(Charge o) { units_ -= o.units_; return *this; }
    constexpr auto operator<=>(const Charge&) const = default;

    /// "p/45", always over 45.
    std::string str() const;
    /// Reduced form: "-8", "2/3", "-1/9".
    std::string reduced() const;

private:
    constexpr explicit Charge(std::int64_t units) : units_(units) {}
    std::int64_t units_ = 0;
};

namespace amount {
inline constexpr Charge third = Charge::units(15);
inline constexpr Charge ninth = Charge::units(5);
inline constexpr Charge fifth = Charge::units(9);
inline constexpr Charge fifteenth = Charge::units(3);
inline constexpr Charge two_fifteenths = Charge::units(6);
}  // namespace amount

/// True for the five amounts the rules ever move.
bool is_rule_amount(Charge c);

enum class ElementKind { Vertex, Face };

struct Element {
    ElementKind kind = ElementKind::Vertex;
    std::uint32_t id = 0;
    bool operator==(const Element&) const = default;
};

std::string_view to_string(ElementKind k) noexcept;

struct TransferRecord {
    std::string rule;  // R1 .. R10, with a/b for R7 and R8
    Element source;
    Element sink;
    Charge amount;
};

struct ChargeLedger {
    std::vector<Charge> vertex_charges;
    std::vector<Charge> face_charges;
    std::vector<TransferRecord> transfers;

    Charge& at(Element e);
    Charge at(Element e) const;
    Charge total() const;
};

/// mu(v) = d(v) - 4, mu(f) = l(f) - 4. The total must equal -8 per
/// component; otherwise throws EulerIdentityViolated.
ChargeLedger initial_charges(const PlaneGraph& g);

/// Apply R1..R10 once, each evaluated on g's structure (not on the running
/// charges), logging every transfer.
ChargeLedger apply_rules(const PlaneGraph& g, ChargeLedger ledger);

struct NegativeElement {
    Element element;
    Charge charge;
};

struct AuditReport {
    Charge initial_total;
    Charge final_total;
    bool conserved = false;
    std::vector<NegativeElement> negatives;
    std::size_t transfer_count = 0;
    std::optional<ConfigMatch> configuration;
    /// No configuration and every final charge nonnegative: impossible if
    /// the reducibility and discharging arguments are both right.
    bool falsification = false;
    ChargeLedger ledger;
};

AuditReport audit(const PlaneGraph& g);

}  // namespace twodist
