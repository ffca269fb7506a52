#include "subsum/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace subsum {

long long max_vertices() {
    if (const char* env = std::getenv("SUBSUM_MAX_N")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 512;
}

Group::Group(std::vector<int> orders) {
    if (orders.empty()) throw InvalidGroupError("group needs at least one cyclic factor");
    for (int n : orders) {
        if (n < 1) throw InvalidGroupError("cyclic factor orders must be >= 1");
    }
    std::erase(orders, 1);
    if (orders.empty()) orders = {1};  // trivial group
    orders_ = std::move(orders);

    const long long cap = max_vertices();
    for (int n : orders_) {
        order_ *= n;
        if (order_ > cap)
            throw ResourceLimitError("group order exceeds the vertex cap of " +
                                     std::to_string(cap) + " (set SUBSUM_MAX_N to raise it)");
    }
    weight_.assign(orders_.size(), 1);
    for (int i = static_cast<int>(orders_.size()) - 2; i >= 0; --i)
        weight_[i] = weight_[i + 1] * orders_[i + 1];
}

long long Group::exponent() const {
    long long e = 1;
    for (int n : orders_) e = std::lcm(e, static_cast<long long>(n));
    return e;
}

Element Group::element_at(long long index) const {
    if (index < 0 || index >= order_) throw InvalidElementError("element index out of range");
    Element e(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        e[i] = static_cast<int>(index / weight_[i]);
        index %= weight_[i];
    }
    return e;
}

long long Group::index_of(const Element& e) const {
    check(e);
    long long idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) idx += weight_[i] * e[i];
    return idx;
}

void Group::check(const Element& e) const {
    if (e.size() != orders_.size())
        throw InvalidElementError("element has " + std::to_string(e.size()) +
                                  " coordinates, group has " + std::to_string(orders_.size()));
    for (std::size_t i = 0; i < orders_.size(); ++i)
        if (e[i] < 0 || e[i] >= orders_[i])
            throw InvalidElementError("coordinate " + std::to_string(i) + " out of range");
}

Element Group::add(const Element& x, const Element& y) const {
    check(x);
    check(y);
    Element r(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) r[i] = (x[i] + y[i]) % orders_[i];
    return r;
}

Element Group::neg(const Element& x) const {
    check(x);
    Element r(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) r[i] = x[i] == 0 ? 0 : orders_[i] - x[i];
    return r;
}

Element Group::scalar(long long n, const Element& x) const {
    check(x);
    Element r(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        long long f = n % orders_[i];
        if (f < 0) f += orders_[i];
        r[i] = static_cast<int>((f * x[i]) % orders_[i]);
    }
    return r;
}

Subgroup subgroup_from_members(const Group& g, const Bitset& membership) {
    const int n = static_cast<int>(g.order());
    if (membership.size() != n) throw InvalidSubgroupError("membership bitset has the wrong size");
    if (!membership.test(0)) throw InvalidSubgroupError("subgroup must contain the identity");

    std::vector<long long> members;
    for (int i = membership.find_first(); i >= 0; i = membership.find_next(i + 1))
        members.push_back(i);

    // closure under negation and pairwise addition, by exhaustion
    std::vector<Element> coords;
    coords.reserve(members.size());
    for (long long idx : members) coords.push_back(g.element_at(idx));
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!membership.test(static_cast<int>(g.index_of(g.neg(coords[i])))))
            throw InvalidSubgroupError("member set is not closed under negation");
        for (std::size_t j = i; j < members.size(); ++j)
            if (!membership.test(static_cast<int>(g.index_of(g.add(coords[i], coords[j])))))
                throw InvalidSubgroupError("member set is not closed under addition");
    }
    return Subgroup{g, std::move(members), membership};
}

Subgroup subgroup_nG(const Group& g, long long n) {
    if (n < 1) throw InvalidParameterError("n must be >= 1 for nG");
    Bitset membership(static_cast<int>(g.order()));
    for (long long idx = 0; idx < g.order(); ++idx)
        membership.set(static_cast<int>(g.index_of(g.scalar(n, g.element_at(idx)))));
    return subgroup_from_members(g, membership);
}

Subgroup subgroup_generated(const Group& g, const std::vector<Element>& gens) {
    Bitset membership(static_cast<int>(g.order()));
    membership.set(0);
    std::vector<long long> queue{0};
    while (!queue.empty()) {
        Element x = g.element_at(queue.back());
        queue.pop_back();
        for (const Element& gen : gens) {
            for (const Element& next : {g.add(x, gen), g.add(x, g.neg(gen))}) {
                long long idx = g.index_of(next);
                if (!membership.test(static_cast<int>(idx))) {
                    membership.set(static_cast<int>(idx));
                    queue.push_back(idx);
                }
            }
        }
    }
    return subgroup_from_members(g, membership);
}

Subgroup subgroup_zero(const Group& g) {
    Bitset membership(static_cast<int>(g.order()));
    membership.set(0);
    return subgroup_from_members(g, membership);
}

Subgroup subgroup_full(const Group& g) {
    Bitset membership(static_cast<int>(g.order()));
    for (long long i = 0; i < g.order(); ++i) membership.set(static_cast<int>(i));
    return subgroup_from_members(g, membership);
}

namespace {

bool is_involution_or_zero(const Group& g, long long idx) {
    const Element x = g.element_at(idx);
    for (std::size_t i = 0; i < x.size(); ++i)
        if ((2 * x[i]) % g.orders()[i] != 0) return false;
    return true;
}

}  // namespace

long long involution_count(const Group& g) {
    long long count = 0;
    for (long long i = 0; i < g.order(); ++i)
        if (is_involution_or_zero(g, i)) ++count;
    long long even_factors = 0;
    for (int n : g.orders())
        if (n % 2 == 0) ++even_factors;
    if (count != (1LL << even_factors))
        throw Error("involution census disagrees with the 2^(#even factors) formula");
    return count;
}

long long involution_count(const Group& g, const Subgroup& within) {
    if (!(within.group == g)) throw InvalidSubgroupError("subgroup belongs to a different group");
    long long count = 0;
    for (long long idx : within.members)
        if (is_involution_or_zero(g, idx)) ++count;
    return count;
}

CosetStats classify_cosets(const Group& g, const Subgroup& h) {
    if (!(h.group == g)) throw InvalidSubgroupError("subgroup belongs to a different group");
    // revalidate closure; callers may hand us aggregates built by hand
    subgroup_from_members(g, h.membership);

    const long long n = g.order();
    const long long k = h.size();
    if (n % k != 0) throw InvalidSubgroupError("subgroup size does not divide the group order");

    CosetStats st;
    st.n = n;
    st.k = k;
    st.m = n / k;
    st.sG = involution_count(g);
    st.sH = involution_count(g, h);

    long long doubles_into_h = 0;  // |{x in G : 2x in H}|
    for (long long x = 0; x < n; ++x)
        if (h.contains(g.index_of(g.scalar(2, g.element_at(x))))) ++doubles_into_h;
    if (doubles_into_h % k != 0)
        throw Error("solutions of 2x in H do not fill whole cosets");
    st.sGH = doubles_into_h / k;

    Bitset seen(static_cast<int>(n));
    for (long long a = 0; a < n; ++a) {
        if (seen.test(static_cast<int>(a))) continue;
        const Element rep = g.element_at(a);
        std::vector<long long> coset;
        coset.reserve(k);
        for (long long hidx : h.members) {
            long long idx = g.index_of(g.add(g.element_at(hidx), rep));
            coset.push_back(idx);
            seen.set(static_cast<int>(idx));
        }
        int type;
        if (!h.contains(g.index_of(g.scalar(2, rep)))) {
            type = 1;
        } else {
            type = 2;
            for (long long idx : coset)
                if (is_involution_or_zero(g, idx)) {
                    type = 3;
                    break;
                }
        }
        (type == 1 ? st.m1 : type == 2 ? st.m2 : st.m3) += 1;
        st.coset_reps.push_back({rep, type});
    }

    if (st.m1 + st.m2 + st.m3 != st.m || st.m2 + st.m3 != st.sGH ||
        st.m3 * st.sH != st.sG || st.m1 % 2 != 0)
        throw Error("coset census identities failed");
    return st;
}

// --- literals -------------------------------------------------------------

namespace {

void skip_spaces(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
}

long long parse_int_at(const std::string& s, std::size_t& pos) {
    skip_spaces(s, pos);
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw ParseError("expected an integer", pos);
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        if (v > 1'000'000'000) throw ParseError("integer too large", pos);
        ++pos;
    }
    return v;
}

}  // namespace

Group parse_group_literal(const std::string& text) {
    std::vector<int> orders;
    std::size_t pos = 0;
    while (true) {
        orders.push_back(static_cast<int>(parse_int_at(text, pos)));
        skip_spaces(text, pos);
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    return Group(orders);
}

Subgroup parse_subgroup_literal(const std::string& text, const Group& g) {
    if (text == "full") return subgroup_full(g);
    if (text == "zero") return subgroup_zero(g);
    if (text.starts_with("n:")) {
        std::size_t pos = 2;
        long long n = parse_int_at(text, pos);
        if (pos != text.size()) throw ParseError("trailing characters after n:<int>", pos);
        return subgroup_nG(g, n);
    }
    if (text.starts_with("gens:")) {
        std::size_t pos = 5;
        std::vector<Element> gens;
        while (true) {
            if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
            ++pos;
            Element e;
            while (true) {
                e.push_back(static_cast<int>(parse_int_at(text, pos)));
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                break;
            }
            if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
            ++pos;
            gens.push_back(std::move(e));
            if (pos == text.size()) break;
            if (text[pos] != ';') throw ParseError("expected ';' between generators", pos);
            ++pos;
        }
        return subgroup_generated(g, gens);
    }
    throw ParseError("subgroup literal must be n:<int>, gens:(...), full or zero", 0);
}

std::string format_group(const Group& g) {
    std::string s;
    for (std::size_t i = 0; i < g.orders().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(g.orders()[i]);
    }
    return s;
}

std::string format_element(const Element& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    return s + ")";
}

}  // namespace subsum
