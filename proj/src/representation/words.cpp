#include "conevol/representation/words.hpp"

namespace conevol::rep {

namespace {

using L = Letter;

std::vector<Letter> concat(std::initializer_list<std::vector<Letter>> parts) {
    std::vector<Letter> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// [x,y] = x y x^-1 y^-1
const std::vector<Letter> kCommST = {L::S, L::T, L::SInv, L::TInv};       // [s,t]
const std::vector<Letter> kCommSTi = {L::S, L::TInv, L::SInv, L::T};      // [s,t^-1]
const std::vector<Letter> kCommTS = {L::T, L::S, L::TInv, L::SInv};       // [t,s]
const std::vector<Letter> kCommTSi = {L::T, L::SInv, L::TInv, L::S};      // [t,s^-1]

}  // namespace

const std::vector<Letter>& relator_word() {
    static const std::vector<Letter> w =
        concat({{L::SInv}, kCommST, kCommST, kCommSTi, kCommSTi});
    return w;
}

const std::vector<Letter>& longitude_s_word() {
    static const std::vector<Letter> w = concat({relator_word(), {L::S}});
    return w;
}

const std::vector<Letter>& longitude_t_word() {
    static const std::vector<Letter> w =
        concat({{L::TInv}, kCommTS, kCommTS, kCommTSi, kCommTSi, {L::T}});
    return w;
}

}  // namespace conevol::rep
