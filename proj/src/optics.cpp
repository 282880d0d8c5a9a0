#include "zeno/optics.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zeno {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void validate(Mode m) {
    if (static_cast<std::uint8_t>(m) > static_cast<std::uint8_t>(Mode::SinkDB)) {
        throw std::invalid_argument("no such mode");
    }
}

void require_element_mode(Mode m) {
    validate(m);
    if (is_sink(m)) throw std::invalid_argument("element on sink");
}

}  // namespace

const char* to_string(Mode m) {
    switch (m) {
        case Mode::Source: return "SOURCE";
        case Mode::Vacuum: return "VACUUM";
        case Mode::ArmA: return "ARM_A";
        case Mode::ArmB: return "ARM_B";
        case Mode::Inner: return "INNER";
        case Mode::Channel: return "CHANNEL";
        case Mode::OutD1: return "OUT_D1";
        case Mode::OutD2: return "OUT_D2";
        case Mode::SinkD3: return "SINK_D3";
        case Mode::SinkDB: return "SINK_DB";
    }
    throw std::invalid_argument("no such mode");
}

const char* to_string(Polarization p) { return p == Polarization::H ? "H" : "V"; }

PhotonState PhotonState::single(Mode m, Polarization p, Amp a) {
    PhotonState st;
    st.set_amplitude(m, p, a);
    return st;
}

void PhotonState::set_amplitude(Mode m, Polarization p, Amp a, std::uint32_t visits) {
    validate(m);
    ComponentKey key{m, p, visits};
    if (a == Amp{}) {
        amps_.erase(key);
    } else {
        amps_[key] = a;
    }
    check_finite();
}

Amp PhotonState::amplitude(Mode m, Polarization p) const {
    validate(m);
    Amp sum{};
    for (const auto& [k, a] : amps_) {
        if (k.mode == m && k.pol == p) sum += a;
    }
    return sum;
}

Amp PhotonState::amplitude(Mode m, Polarization p, bool tagged) const {
    validate(m);
    Amp sum{};
    for (const auto& [k, a] : amps_) {
        if (k.mode == m && k.pol == p && (k.channel_visits > 0) == tagged) sum += a;
    }
    return sum;
}

double PhotonState::mass(Mode m) const {
    validate(m);
    double total = 0.0;
    for (const auto& [k, a] : amps_) {
        if (k.mode == m) total += std::norm(a);
    }
    return total;
}

double PhotonState::mass(Mode m, bool tagged) const {
    validate(m);
    double total = 0.0;
    for (const auto& [k, a] : amps_) {
        if (k.mode == m && (k.channel_visits > 0) == tagged) total += std::norm(a);
    }
    return total;
}

double PhotonState::norm_sq() const {
    double total = 0.0;
    for (const auto& [k, a] : amps_) total += std::norm(a);
    return total;
}

double PhotonState::ledger_total() const {
    double total = 0.0;
    for (const auto& [k, e] : ledger_) total += e.probability;
    return total;
}

double PhotonState::ledger_total(Mode sink) const {
    double total = 0.0;
    for (const auto& [k, e] : ledger_) {
        if (k.sink == sink) total += e.probability;
    }
    return total;
}

double PhotonState::tagged_ledger_total() const {
    double total = 0.0;
    for (const auto& [k, e] : ledger_) total += e.tagged;
    return total;
}

void PhotonState::put(const ComponentKey& k, Amp a) {
    if (a == Amp{}) return;
    auto [it, inserted] = amps_.emplace(k, a);
    if (!inserted) throw std::invalid_argument("mode collision");
}

void PhotonState::check_finite() const {
    for (const auto& [k, a] : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::runtime_error("non-finite amplitude");
        }
    }
}

void PhotonState::apply_rotation(Mode m, RotationAngle theta) {
    require_element_mode(m);
    if (!std::isfinite(theta.radians)) throw std::invalid_argument("non-finite angle");

    const double c = std::cos(theta.radians);
    const double s = std::sin(theta.radians);

    // Pull out every (sector -> (h, v)) pair on this mode.
    std::map<std::uint32_t, std::pair<Amp, Amp>> sectors;
    for (auto it = amps_.begin(); it != amps_.end();) {
        if (it->first.mode == m) {
            auto& hv = sectors[it->first.channel_visits];
            (it->first.pol == Polarization::H ? hv.first : hv.second) = it->second;
            it = amps_.erase(it);
        } else {
            ++it;
        }
    }
    for (const auto& [visits, hv] : sectors) {
        const auto [h, v] = hv;
        put({m, Polarization::H, visits}, c * h - s * v);
        put({m, Polarization::V, visits}, s * h + c * v);
    }
    check_finite();
}

void PhotonState::apply_polarization_flip(Mode m) {
    require_element_mode(m);
    std::map<std::uint32_t, std::pair<Amp, Amp>> sectors;
    for (auto it = amps_.begin(); it != amps_.end();) {
        if (it->first.mode == m) {
            auto& hv = sectors[it->first.channel_visits];
            (it->first.pol == Polarization::H ? hv.first : hv.second) = it->second;
            it = amps_.erase(it);
        } else {
            ++it;
        }
    }
    for (const auto& [visits, hv] : sectors) {
        const auto [h, v] = hv;
        put({m, Polarization::H, visits}, -v);
        put({m, Polarization::V, visits}, h);
    }
}

void PhotonState::apply_pbs(Mode in, Mode h_out, Mode v_out) {
    require_element_mode(in);
    require_element_mode(h_out);
    require_element_mode(v_out);
    if (h_out == v_out) throw std::invalid_argument("pbs outputs must differ");

    std::vector<std::pair<ComponentKey, Amp>> moved;
    for (const auto& [k, a] : amps_) {
        if (k.mode == in) {
            Mode dest = (k.pol == Polarization::H) ? h_out : v_out;
            moved.push_back({{dest, k.pol, k.channel_visits}, a});
        }
    }
    // Everything on `in` is extracted, so a destination collides only if it
    // sits on another mode. Checked before the state is touched.
    for (const auto& [k, a] : moved) {
        if (k.mode != in && amps_.contains(k)) {
            throw std::invalid_argument("mode collision");
        }
    }
    std::erase_if(amps_, [in](const auto& e) { return e.first.mode == in; });
    for (const auto& [k, a] : moved) put(k, a);
}

void PhotonState::apply_bs(Mode a, Mode b, Mode out_bright, Mode out_dark) {
    require_element_mode(a);
    require_element_mode(b);
    require_element_mode(out_bright);
    require_element_mode(out_dark);
    if (a == b) throw std::invalid_argument("bs inputs must differ");
    if (out_bright == out_dark) throw std::invalid_argument("bs outputs must differ");

    // sector -> (amp on a, amp on b)
    std::map<std::pair<Polarization, std::uint32_t>, std::pair<Amp, Amp>> sectors;
    for (auto it = amps_.begin(); it != amps_.end();) {
        if (it->first.mode == a || it->first.mode == b) {
            auto& ab = sectors[{it->first.pol, it->first.channel_visits}];
            (it->first.mode == a ? ab.first : ab.second) = it->second;
            it = amps_.erase(it);
        } else {
            ++it;
        }
    }
    for (const auto& [sec, ab] : sectors) {
        const auto [pol, visits] = sec;
        const auto [amp_a, amp_b] = ab;
        put({out_bright, pol, visits}, (amp_a + amp_b) * kInvSqrt2);
        put({out_dark, pol, visits}, (amp_a - amp_b) * kInvSqrt2);
    }
    check_finite();
}

void PhotonState::absorb(Mode m, Mode sink, std::int32_t cycle) {
    validate(m);
    validate(sink);
    if (!is_sink(sink)) throw std::invalid_argument("absorb target is not a sink");

    double total = 0.0;
    double tagged = 0.0;
    for (auto it = amps_.begin(); it != amps_.end();) {
        if (it->first.mode == m) {
            const double p = std::norm(it->second);
            total += p;
            if (it->first.channel_visits > 0) tagged += p;
            it = amps_.erase(it);
        } else {
            ++it;
        }
    }
    if (total > 0.0) {
        auto& entry = ledger_[{sink, cycle}];
        entry.probability += total;
        entry.tagged += tagged;
    }
}

void PhotonState::mark_channel(Mode m) {
    validate(m);
    std::vector<std::pair<ComponentKey, Amp>> moved;
    for (auto it = amps_.begin(); it != amps_.end();) {
        if (it->first.mode == m) {
            moved.emplace_back(it->first, it->second);
            it = amps_.erase(it);
        } else {
            ++it;
        }
    }
    for (const auto& [k, a] : moved) {
        put({k.mode, k.pol, k.channel_visits + 1}, a);
    }
}

}  // namespace zeno
