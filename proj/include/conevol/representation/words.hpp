#pragma once

#include <span>
#include <vector>

#include "conevol/representation/mat2.hpp"

namespace conevol::rep {

enum class Letter { S, T, SInv, TInv };

/// Left-to-right product of the word; empty word evaluates to the identity.
template <class Scalar>
Mat2<Scalar> word_eval(std::span<const Letter> letters, const Mat2<Scalar>& s,
                       const Mat2<Scalar>& t) {
    Mat2<Scalar> out = Mat2<Scalar>::identity();
    const Mat2<Scalar> si = s.inverse();
    const Mat2<Scalar> ti = t.inverse();
    for (Letter l : letters) {
        switch (l) {
            case Letter::S: out = out * s; break;
            case Letter::T: out = out * t; break;
            case Letter::SInv: out = out * si; break;
            case Letter::TInv: out = out * ti; break;
        }
    }
    return out;
}

/// Relator word w = s^-1 [s,t]^2 [s,t^-1]^2 with [x,y] = x y x^-1 y^-1.
const std::vector<Letter>& relator_word();

/// Longitude word l_s = w s.
const std::vector<Letter>& longitude_s_word();

/// Longitude word l_t = t^-1 [t,s]^2 [t,s^-1]^2 t.
const std::vector<Letter>& longitude_t_word();

/// (L_S, L_T) evaluated from the two longitude words.
template <class Scalar>
std::pair<Mat2<Scalar>, Mat2<Scalar>> longitudes(const Mat2<Scalar>& s, const Mat2<Scalar>& t) {
    return {word_eval<Scalar>(longitude_s_word(), s, t),
            word_eval<Scalar>(longitude_t_word(), s, t)};
}

}  // namespace conevol::rep
