/*
   Copyright 2026 The schur-cyclic Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "schur/poly.hpp"

#include <stdexcept>

namespace schur {

Poly::Poly(std::shared_ptr<const FieldCtx> f, std::vector<FqElem> c)
    : f_(std::move(f)), c_(std::move(c))
{
    if (!f_) throw std::invalid_argument("polynomial needs a field context");
    trim();
}

void Poly::trim()
{
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

void Poly::check_same_field(const Poly& b) const
{
    if (f_.get() != b.f_.get())
        throw std::invalid_argument("polynomials live over different field contexts");
}

Poly Poly::zero(std::shared_ptr<const FieldCtx> f) { return Poly(std::move(f), {}); }

Poly Poly::one(std::shared_ptr<const FieldCtx> f) { return Poly(std::move(f), {FqElem{1}}); }

Poly Poly::x(std::shared_ptr<const FieldCtx> f)
{
    return Poly(std::move(f), {FqElem{0}, FqElem{1}});
}

Poly Poly::monomial(std::shared_ptr<const FieldCtx> f, size_t degree, FqElem c)
{
    std::vector<FqElem> v(degree + 1, FqElem{0});
    v[degree] = c;
    return Poly(std::move(f), std::move(v));
}

Poly Poly::from_coeffs(std::shared_ptr<const FieldCtx> f, std::vector<FqElem> coeffs)
{
    for (FqElem c : coeffs)
        if (c.v >= f->q()) throw std::invalid_argument("coefficient outside the field");
    return Poly(std::move(f), std::move(coeffs));
}

Poly Poly::x_pow_n_minus_one(std::shared_ptr<const FieldCtx> f, uint64_t n)
{
    if (n == 0) throw std::invalid_argument("n must be positive");
    std::vector<FqElem> v(n + 1, FqElem{0});
    v[0] = f->neg(f->one());
    v[n] = f->one();
    return Poly(std::move(f), std::move(v));
}

bool Poly::is_monic() const { return !c_.empty() && c_.back() == f_->one(); }

Poly Poly::plus(const Poly& b) const
{
    check_same_field(b);
    std::vector<FqElem> out(std::max(c_.size(), b.c_.size()), FqElem{0});
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = f_->add(coeff(i), b.coeff(i));
    return Poly(f_, std::move(out));
}

Poly Poly::minus(const Poly& b) const
{
    check_same_field(b);
    std::vector<FqElem> out(std::max(c_.size(), b.c_.size()), FqElem{0});
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = f_->sub(coeff(i), b.coeff(i));
    return Poly(f_, std::move(out));
}

Poly Poly::times(const Poly& b) const
{
    check_same_field(b);
    if (is_zero() || b.is_zero()) return zero(f_);
    std::vector<FqElem> out(c_.size() + b.c_.size() - 1, FqElem{0});
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].v == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] = f_->add(out[i + j], f_->mul(c_[i], b.c_[j]));
    }
    return Poly(f_, std::move(out));
}

Poly Poly::scaled(FqElem c) const
{
    std::vector<FqElem> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = f_->mul(c_[i], c);
    return Poly(f_, std::move(out));
}

Poly Poly::shifted_up(size_t j) const
{
    if (is_zero()) return *this;
    std::vector<FqElem> out(c_.size() + j, FqElem{0});
    for (size_t i = 0; i < c_.size(); ++i) out[i + j] = c_[i];
    return Poly(f_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& b) const
{
    check_same_field(b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < b.degree()) return {zero(f_), *this};
    const FqElem lead_inv = f_->inv(b.leading());
    std::vector<FqElem> rem = c_;
    std::vector<FqElem> quo(size_t(degree() - b.degree()) + 1, FqElem{0});
    for (int64_t i = degree(); i >= b.degree(); --i) {
        const FqElem c = rem[size_t(i)];
        if (c.v == 0) continue;
        const FqElem t = f_->mul(c, lead_inv);
        quo[size_t(i - b.degree())] = t;
        for (int64_t j = 0; j <= b.degree(); ++j) {
            const size_t at = size_t(i - b.degree() + j);
            rem[at] = f_->sub(rem[at], f_->mul(t, b.c_[size_t(j)]));
        }
    }
    return {Poly(f_, std::move(quo)), Poly(f_, std::move(rem))};
}

Poly Poly::make_monic() const
{
    if (is_zero() || is_monic()) return *this;
    return scaled(f_->inv(leading()));
}

FqElem Poly::eval(FqElem point) const
{
    FqElem acc{0};
    for (size_t i = c_.size(); i-- > 0;)
        acc = f_->add(f_->mul(acc, point), c_[i]);
    return acc;
}

std::string Poly::to_string() const
{
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].v == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || c_[i].v != 1) out += std::to_string(c_[i].v);
        if (i > 0) {
            out += "X";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly poly_gcd(Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

}  // namespace schur
