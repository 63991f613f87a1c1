#include "k3count/cremona.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace k3count {

BlowupClass BlowupClass::canonical() const
{
    BlowupClass out;
    out.d = d;
    out.alphas.reserve(alphas.size());
    std::copy_if(alphas.begin(), alphas.end(), std::back_inserter(out.alphas),
                 [](long long a) { return a != 0; });
    std::sort(out.alphas.begin(), out.alphas.end(), std::greater<>());
    return out;
}

std::string BlowupClass::to_string() const
{
    std::ostringstream out;
    out << d << ";";
    for (std::size_t i = 0; i < alphas.size(); ++i)
        out << (i == 0 ? "" : ",") << alphas[i];
    return out.str();
}

namespace {

long long parse_integer(const std::string& token)
{
    std::size_t begin = token.find_first_not_of(" \t");
    std::size_t end = token.find_last_not_of(" \t");
    if (begin == std::string::npos)
        throw std::invalid_argument("parse_class: empty integer in \"" + token + "\"");
    const std::string body = token.substr(begin, end - begin + 1);
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(body, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_class: bad integer \"" + body + "\"");
    }
    if (used != body.size())
        throw std::invalid_argument("parse_class: bad integer \"" + body + "\"");
    return value;
}

} // namespace

BlowupClass parse_class(const std::string& text)
{
    const std::size_t semi = text.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("parse_class: expected \"d;a1,a2,...,al\"");
    BlowupClass c;
    c.d = parse_integer(text.substr(0, semi));
    std::string rest = text.substr(semi + 1);
    if (rest.find_first_not_of(" \t") == std::string::npos)
        return c;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t comma = rest.find(',', pos);
        c.alphas.push_back(parse_integer(rest.substr(pos, comma - pos)));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return c;
}

std::string to_string(InvariantValue value)
{
    switch (value) {
    case InvariantValue::Zero: return "Zero";
    case InvariantValue::One: return "One";
    case InvariantValue::Undetermined: return "Undetermined";
    }
    throw std::logic_error("to_string: bad InvariantValue");
}

BlowupClass cremona_transform(const BlowupClass& c, std::size_t i, std::size_t j, std::size_t k)
{
    if (i == j || i == k || j == k)
        throw std::invalid_argument("cremona_transform: indices must be distinct");
    BlowupClass out = c;
    const std::size_t needed = std::max({i, j, k}) + 1;
    if (out.alphas.size() < needed)
        out.alphas.resize(needed, 0);
    const long long ai = out.alphas[i];
    const long long aj = out.alphas[j];
    const long long ak = out.alphas[k];
    out.d = 2 * c.d - ai - aj - ak;
    out.alphas[i] = c.d - aj - ak;
    out.alphas[j] = c.d - ai - ak;
    out.alphas[k] = c.d - ai - aj;
    return out;
}

PairingData pairing_data(const BlowupClass& c)
{
    PairingData p;
    p.self_intersection = c.d * c.d;
    p.canonical_pairing = 3 * c.d;
    for (long long a : c.alphas) {
        p.self_intersection -= a * a;
        p.canonical_pairing -= a;
    }
    return p;
}

BlowupClass class_from_sequence(const AdmissibleSequence& seq)
{
    BlowupClass c;
    c.d = seq.at(0);
    c.alphas.push_back(seq.at(0) - 1);
    // One difference per outward step on each side, stopping one step past
    // the end of the window where the zero-extension takes over.
    const int steps = std::max(seq.hi() + 1, -seq.lo() + 1);
    for (int k = 1; k <= steps; ++k) {
        if (k <= seq.hi() + 1)
            c.alphas.push_back(seq.at(k - 1) - seq.at(k));
        if (k <= -seq.lo() + 1)
            c.alphas.push_back(seq.at(-(k - 1)) - seq.at(-k));
    }
    return c;
}

InvariantValue evaluate_invariant(const BlowupClass& c, int max_steps)
{
    if (max_steps < 1)
        throw std::invalid_argument("evaluate_invariant: max_steps must be positive");
    BlowupClass cur = c;
    int transforms = 0;
    for (;;) {
        cur = cur.canonical();
        std::erase(cur.alphas, 1);
        if (!cur.alphas.empty() && cur.alphas.back() < 0) {
            const bool special = cur.d == 0 && cur.alphas == std::vector<long long>{-1};
            return special ? InvariantValue::One : InvariantValue::Zero;
        }
        const long long alpha_sum = std::accumulate(cur.alphas.begin(), cur.alphas.end(), 0LL);
        if (cur.d < 0 || 3 * cur.d - 1 - alpha_sum < 0)
            return InvariantValue::Zero;
        if (cur.d == 1 && cur.alphas.empty())
            return InvariantValue::One;
        if (transforms == max_steps)
            return InvariantValue::Undetermined;
        if (cur.alphas.size() < 3)
            cur.alphas.resize(3, 1);
        cur = cremona_transform(cur, 0, 1, 2);
        ++transforms;
    }
}

BlowupClass section_class(long long i)
{
    BlowupClass c;
    c.d = 3 * i;
    c.alphas.assign(8, i);
    c.alphas.push_back(i - 1);
    return c;
}

ReductionResult reduce_to_section_class(const BlowupClass& c, int max_steps)
{
    if (max_steps < 1)
        throw std::invalid_argument("reduce_to_section_class: max_steps must be positive");
    BlowupClass cur = c;
    if (cur.alphas.size() > 9) {
        for (std::size_t t = 9; t < cur.alphas.size(); ++t)
            if (cur.alphas[t] != 0)
                throw std::invalid_argument("reduce_to_section_class: more than nine exceptional directions");
        cur.alphas.resize(9);
    }
    cur.alphas.resize(9, 0);
    if (pairing_data(cur).canonical_pairing != 1)
        throw std::invalid_argument("reduce_to_section_class: class must satisfy 3d - sum(alphas) = 1");

    ReductionResult result;
    int transforms = 0;
    for (;;) {
        BlowupClass sorted = cur;
        std::sort(sorted.alphas.begin(), sorted.alphas.end(), std::greater<>());
        if (sorted.alphas != cur.alphas) {
            cur = std::move(sorted);
            result.steps.push_back({"permute", cur});
        }
        if (cur.alphas[0] + cur.alphas[1] + cur.alphas[2] == cur.d) {
            // With 3d - sum(alphas) = 1 the equality case pins the class
            // completely; anything else means the input lay outside the
            // reducible family.
            if (cur.d < 0 || cur.d % 3 != 0 || cur != section_class(cur.d / 3))
                throw std::runtime_error("reduce_to_section_class: terminal class " + cur.to_string()
                                         + " is not a section class");
            result.i = cur.d / 3;
            return result;
        }
        if (transforms == max_steps)
            throw std::runtime_error("reduce_to_section_class: step limit exceeded");
        BlowupClass next = cremona_transform(cur, 0, 1, 2);
        if (next.d >= cur.d)
            throw std::runtime_error("reduce_to_section_class: degree failed to decrease at "
                                     + cur.to_string());
        cur = std::move(next);
        result.steps.push_back({"cremona(0,1,2)", cur});
        ++transforms;
    }
}

BlowupClass scramble_class(const BlowupClass& c, int moves, std::mt19937& rng)
{
    if (moves < 0)
        throw std::invalid_argument("scramble_class: moves must be non-negative");
    BlowupClass out = c;
    if (out.alphas.size() < 9)
        out.alphas.resize(9, 0);
    const auto pick = [&rng](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
    for (int m = 0; m < moves; ++m) {
        if (pick(2) == 0) {
            std::shuffle(out.alphas.begin(), out.alphas.end(), rng);
        } else {
            const std::size_t n = out.alphas.size();
            const std::size_t i = pick(n);
            std::size_t j = pick(n - 1);
            if (j >= i)
                ++j;
            std::size_t k = pick(n - 2);
            if (k >= std::min(i, j))
                ++k;
            if (k >= std::max(i, j))
                ++k;
            out = cremona_transform(out, i, j, k);
        }
    }
    return out;
}

} // namespace k3count
