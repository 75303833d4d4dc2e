#ifndef ALV_DYNKIN_DYNKIN_TYPE_HPP
#define ALV_DYNKIN_DYNKIN_TYPE_HPP

#include <string>
#include <vector>

namespace alv::dynkin {

enum class AdeKind { A, D, E };

struct AdeComponent {
    AdeKind kind;
    int rank;

    bool operator==(const AdeComponent&) const = default;
};

// Valid ranks: A_n n>=1, D_n n>=4, E_n n in {6,7,8}.
bool valid_component(const AdeComponent& c);

// A formal direct sum of ADE components. Components keep construction
// order for display; comparison is as multisets.
class DynkinType {
public:
    DynkinType() = default;
    explicit DynkinType(std::vector<AdeComponent> comps);

    static DynkinType parse(const std::string& name);  // "D16+A3"

    const std::vector<AdeComponent>& components() const { return comps_; }
    int rank() const;
    std::string name() const;

    bool operator==(const DynkinType& o) const;  // multiset equality
    bool operator<(const DynkinType& o) const;   // on sorted component lists

private:
    std::vector<AdeComponent> comps_;
};

std::string component_name(const AdeComponent& c);

}  // namespace alv::dynkin

#endif
