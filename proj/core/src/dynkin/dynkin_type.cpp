#include "alv/dynkin/dynkin_type.hpp"

#include <algorithm>
#include <stdexcept>

namespace alv::dynkin {

bool valid_component(const AdeComponent& c) {
    switch (c.kind) {
        case AdeKind::A: return c.rank >= 1;
        case AdeKind::D: return c.rank >= 4;
        case AdeKind::E: return c.rank >= 6 && c.rank <= 8;
    }
    return false;
}

std::string component_name(const AdeComponent& c) {
    char k = c.kind == AdeKind::A ? 'A' : c.kind == AdeKind::D ? 'D' : 'E';
    return k + std::to_string(c.rank);
}

DynkinType::DynkinType(std::vector<AdeComponent> comps) : comps_(std::move(comps)) {
    for (const auto& c : comps_)
        if (!valid_component(c))
            throw std::invalid_argument("DynkinType: invalid component " + component_name(c));
}

DynkinType DynkinType::parse(const std::string& name) {
    std::vector<AdeComponent> comps;
    std::size_t i = 0;
    while (i < name.size()) {
        AdeKind kind;
        switch (name[i]) {
            case 'A': kind = AdeKind::A; break;
            case 'D': kind = AdeKind::D; break;
            case 'E': kind = AdeKind::E; break;
            default: throw std::invalid_argument("DynkinType: bad component letter in " + name);
        }
        ++i;
        std::size_t start = i;
        while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
        if (start == i) throw std::invalid_argument("DynkinType: missing rank in " + name);
        comps.push_back({kind, std::stoi(name.substr(start, i - start))});
        if (i < name.size()) {
            if (name[i] != '+') throw std::invalid_argument("DynkinType: expected '+' in " + name);
            ++i;
            if (i == name.size()) throw std::invalid_argument("DynkinType: trailing '+' in " + name);
        }
    }
    if (comps.empty()) throw std::invalid_argument("DynkinType: empty type string");
    return DynkinType(std::move(comps));
}

int DynkinType::rank() const {
    int r = 0;
    for (const auto& c : comps_) r += c.rank;
    return r;
}

std::string DynkinType::name() const {
    std::string s;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) s += "+";
        s += component_name(comps_[i]);
    }
    return s;
}

namespace {
std::vector<std::pair<int, int>> sorted_key(const std::vector<AdeComponent>& cs) {
    std::vector<std::pair<int, int>> k;
    for (const auto& c : cs) k.emplace_back(static_cast<int>(c.kind), c.rank);
    std::sort(k.begin(), k.end());
    return k;
}
}  // namespace

bool DynkinType::operator==(const DynkinType& o) const {
    return sorted_key(comps_) == sorted_key(o.comps_);
}

bool DynkinType::operator<(const DynkinType& o) const {
    return sorted_key(comps_) < sorted_key(o.comps_);
}

}  // namespace alv::dynkin
