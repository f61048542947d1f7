#include "hypercox/algnum.hpp"

#include "hypercox/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <tuple>

namespace hypercox {

namespace {

using Coeffs = std::vector<mpq_class>;
using CSpan = std::span<const mpq_class>;

std::atomic<long>& seed_storage() {
    static std::atomic<long> seed = [] {
        long bits = 64;
        if (const char* env = std::getenv("HYPERCOX_PRECISION")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v >= 16) bits = v;
        }
        return bits;
    }();
    return seed;
}

bool all_zero(CSpan a) {
    return std::all_of(a.begin(), a.end(), [](const mpq_class& q) { return q == 0; });
}

void add_into(std::span<mpq_class> dst, CSpan src) {
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] != 0) dst[i] += src[i];
    }
}

Coeffs mul_raw(const Tower* t, CSpan a, CSpan b);

Coeffs mul_raw(const Tower* t, CSpan a, CSpan b) {
    if (t->level() == 0) return {a[0] * b[0]};
    const std::size_t h = a.size() / 2;
    const Tower* p = t->parent().get();
    CSpan a0 = a.subspan(0, h), a1 = a.subspan(h);
    CSpan b0 = b.subspan(0, h), b1 = b.subspan(h);
    const bool za0 = all_zero(a0), za1 = all_zero(a1);
    const bool zb0 = all_zero(b0), zb1 = all_zero(b1);
    Coeffs out(a.size());
    std::span<mpq_class> lo(out.data(), h), hi(out.data() + h, h);
    if (!za0 && !zb0) add_into(lo, mul_raw(p, a0, b0));
    if (!za1 && !zb1) {
        Coeffs prod = mul_raw(p, a1, b1);
        add_into(lo, mul_raw(p, prod, t->radicand().coeffs()));
    }
    if (!za0 && !zb1) add_into(hi, mul_raw(p, a0, b1));
    if (!za1 && !zb0) add_into(hi, mul_raw(p, a1, b0));
    return out;
}

Coeffs inv_raw(const Tower* t, CSpan a) {
    if (t->level() == 0) {
        if (a[0] == 0) throw DivisionByZero();
        return {1 / a[0]};
    }
    const std::size_t h = a.size() / 2;
    const Tower* p = t->parent().get();
    CSpan a0 = a.subspan(0, h), a1 = a.subspan(h);
    Coeffs out(a.size());
    if (all_zero(a1)) {
        Coeffs i0 = inv_raw(p, a0);
        std::copy(i0.begin(), i0.end(), out.begin());
        return out;
    }
    // (a0 + a1 r)^-1 = (a0 - a1 r) / (a0^2 - d a1^2)
    Coeffs n = mul_raw(p, a0, a0);
    Coeffs s = mul_raw(p, mul_raw(p, a1, a1), t->radicand().coeffs());
    for (std::size_t i = 0; i < h; ++i) n[i] -= s[i];
    Coeffs ni = inv_raw(p, n);
    Coeffs lo = mul_raw(p, a0, ni);
    Coeffs hi = mul_raw(p, a1, ni);
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = lo[i];
        out[h + i] = -hi[i];
    }
    return out;
}

mpq_class norm_raw(const Tower* t, CSpan a) {
    if (t->level() == 0) return a[0];
    const std::size_t h = a.size() / 2;
    const Tower* p = t->parent().get();
    CSpan a0 = a.subspan(0, h), a1 = a.subspan(h);
    Coeffs n = mul_raw(p, a0, a0);
    if (!all_zero(a1)) {
        Coeffs s = mul_raw(p, mul_raw(p, a1, a1), t->radicand().coeffs());
        for (std::size_t i = 0; i < h; ++i) n[i] -= s[i];
    }
    return norm_raw(p, n);
}

Interval enclosure_raw(const Tower* t, CSpan a, mpfr_prec_t prec) {
    if (t->level() == 0) return Interval(a[0], prec);
    const std::size_t h = a.size() / 2;
    const Tower* p = t->parent().get();
    CSpan a0 = a.subspan(0, h), a1 = a.subspan(h);
    if (all_zero(a1)) return enclosure_raw(p, a0, prec);
    Interval hi = enclosure_raw(p, a1, prec) * t->radical_enclosure(t->level(), prec);
    if (all_zero(a0)) return hi;
    return enclosure_raw(p, a0, prec) + hi;
}

std::string coeff_key(CSpan a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ';';
        s += a[i].get_str();
    }
    return s;
}

bool is_rational_square(const mpq_class& q, mpq_class* root) {
    if (q < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return false;
    if (root) {
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
        *root = mpq_class(n, d);
        root->canonicalize();
    }
    return true;
}

std::optional<AlgNum> sqrt_in(const AlgNum& x);

// Square root of a + b*sqrt(d) inside the tower of x (level >= 1).
std::optional<AlgNum> sqrt_split(const AlgNum& x) {
    const TowerPtr& t = x.tower();
    const TowerPtr& p = t->parent();
    const std::size_t h = x.coeffs().size() / 2;
    AlgNum a(p, Coeffs(x.coeffs().begin(), x.coeffs().begin() + static_cast<long>(h)));
    AlgNum b(p, Coeffs(x.coeffs().begin() + static_cast<long>(h), x.coeffs().end()));
    const AlgNum& d = t->radicand();
    const AlgNum r = AlgNum::radical(t);
    if (b.is_zero()) {
        if (auto s = sqrt_in(a)) return s->lifted(t);
        if (auto s = sqrt_in(a / d)) return s->lifted(t) * r;
        return std::nullopt;
    }
    auto n = sqrt_in(a * a - d * b * b);
    if (!n) return std::nullopt;
    for (int sgn : {1, -1}) {
        AlgNum c2 = (a + (sgn > 0 ? *n : -*n)) / AlgNum(2);
        if (c2.sign() <= 0) continue;
        auto c = sqrt_in(c2);
        if (!c) continue;
        AlgNum e = b / (AlgNum(2) * *c);
        AlgNum y = c->lifted(t) + e.lifted(t) * r;
        if (y.sign() < 0) y = -y;
        return y;
    }
    return std::nullopt;
}

std::optional<AlgNum> sqrt_in(const AlgNum& x) {
    if (x.is_zero()) return AlgNum(x.tower(), Coeffs(x.coeffs().size()));
    if (x.level() == 0) {
        mpq_class r;
        if (is_rational_square(x.coeffs()[0], &r)) return AlgNum(r);
        return std::nullopt;
    }
    if (x.sign() < 0) return std::nullopt;
    return sqrt_split(x);
}

struct JoinData {
    TowerPtr a, b, result;
    int common = 0;
    // images[l] = sqrt(d_l) of b, as an element of result, for l > common
    std::vector<AlgNum> images;
};

std::mutex join_mu;
std::map<std::pair<const Tower*, const Tower*>, std::shared_ptr<const JoinData>>& join_cache() {
    static std::map<std::pair<const Tower*, const Tower*>, std::shared_ptr<const JoinData>> m;
    return m;
}

AlgNum transport_raw(const JoinData& j, int lvl, CSpan c) {
    if (lvl <= j.common) return AlgNum(j.b->prefix(lvl), Coeffs(c.begin(), c.end())).lifted(j.result);
    const std::size_t h = c.size() / 2;
    AlgNum lo = transport_raw(j, lvl - 1, c.subspan(0, h));
    CSpan hi = c.subspan(h);
    if (all_zero(hi)) return lo;
    return lo + transport_raw(j, lvl - 1, hi) * j.images[static_cast<std::size_t>(lvl)];
}

std::shared_ptr<const JoinData> join(const TowerPtr& a, const TowerPtr& b) {
    const auto key = std::make_pair(a.get(), b.get());
    {
        std::lock_guard lk(join_mu);
        auto it = join_cache().find(key);
        if (it != join_cache().end()) return it->second;
    }
    auto j = std::make_shared<JoinData>();
    j->a = a;
    j->b = b;
    j->common = a->common_level(*b);
    j->result = a;
    j->images.resize(static_cast<std::size_t>(b->level()) + 1);
    for (int l = j->common + 1; l <= b->level(); ++l) {
        const AlgNum& d = b->ancestor(l)->radicand();
        AlgNum dj = transport_raw(*j, l - 1, d.coeffs());
        AlgNum r = sqrt_extend(dj);
        j->result = r.tower();
        for (int m = j->common + 1; m < l; ++m) {
            auto& im = j->images[static_cast<std::size_t>(m)];
            im = im.lifted(j->result);
        }
        j->images[static_cast<std::size_t>(l)] = r;
    }
    std::lock_guard lk(join_mu);
    auto [it, inserted] = join_cache().emplace(key, std::move(j));
    return it->second;
}

AlgNum transport(const AlgNum& x, const JoinData& j) {
    return transport_raw(j, x.level(), x.coeffs());
}

struct KeyCacheEntry {
    TowerPtr tower;
    std::string key;
};
std::mutex key_mu;
std::map<std::pair<const Tower*, std::string>, KeyCacheEntry>& key_cache() {
    static std::map<std::pair<const Tower*, std::string>, KeyCacheEntry> m;
    return m;
}

}  // namespace

mpfr_prec_t precision_seed() { return seed_storage().load(); }
void set_precision_seed(mpfr_prec_t bits) { seed_storage().store(std::max<long>(bits, 16)); }

// ---------------------------------------------------------------- Tower

Tower::Tower(Key, TowerPtr parent, std::unique_ptr<AlgNum> radicand)
    : parent_(std::move(parent)), radicand_(std::move(radicand)) {
    if (parent_) {
        level_ = parent_->level_ + 1;
        chain_ = parent_->chain_;
    }
    chain_.push_back(this);
}

Tower::~Tower() = default;

const TowerPtr& Tower::rationals() {
    static const TowerPtr q = std::make_shared<const Tower>(Key{}, nullptr, nullptr);
    return q;
}

const AlgNum& Tower::radicand() const {
    if (!radicand_) throw Error("the rationals have no radicand");
    return *radicand_;
}

TowerPtr Tower::prefix(int lvl) const {
    if (lvl < 0 || lvl > level_) throw Error("tower prefix level out of range");
    return ancestor(lvl)->shared_from_this();
}

bool Tower::extends(const Tower& other) const {
    return other.level_ <= level_ && ancestor(other.level_) == &other;
}

int Tower::common_level(const Tower& other) const {
    int l = std::min(level_, other.level_);
    while (l > 0 && ancestor(l) != other.ancestor(l)) --l;
    return l;
}

TowerPtr Tower::extend(const AlgNum& d) const {
    AlgNum dd = d.tower().get() == this ? d : d.lifted(shared_from_this());
    const std::string key = coeff_key(dd.coeffs());
    std::lock_guard lk(mu_);
    auto it = children_.find(key);
    if (it != children_.end()) {
        if (auto alive = it->second.lock()) return alive;
    }
    auto child =
        std::make_shared<const Tower>(Key{}, shared_from_this(), std::make_unique<AlgNum>(std::move(dd)));
    children_[key] = child;
    return child;
}

TowerPtr Tower::conjugate(const std::vector<int8_t>& signs) const {
    if (signs.size() != static_cast<std::size_t>(level_))
        throw InvalidEmbedding("sign vector length does not match the tower level");
    if (level_ == 0) return shared_from_this();
    // the conjugate tower does not depend on the sign of the top radical
    std::vector<int8_t> key = signs;
    key.back() = 1;
    {
        std::lock_guard lk(mu_);
        auto it = conjugates_.find(key);
        if (it != conjugates_.end()) return it->second;
    }
    Embedding below{parent_, std::vector<int8_t>(signs.begin(), signs.end() - 1)};
    AlgNum d = apply_embedding(*radicand_, below);
    if (d.sign() <= 0) throw InvalidEmbedding("conjugated radicand is not positive");
    TowerPtr img = d.tower()->extend(d);
    std::lock_guard lk(mu_);
    conjugates_.emplace(key, img);
    return img;
}

Interval Tower::own_radical_enclosure(mpfr_prec_t prec) const {
    std::lock_guard lk(mu_);
    if (enclosure_ && enclosure_->precision() >= prec) return *enclosure_;
    Interval e = radicand_->enclosure(prec).sqrt();
    enclosure_ = std::make_unique<Interval>(e);
    return e;
}

Interval Tower::radical_enclosure(int lvl, mpfr_prec_t prec) const {
    if (lvl < 1 || lvl > level_) throw Error("radical level out of range");
    return ancestor(lvl)->own_radical_enclosure(prec);
}

std::string Tower::describe() const {
    if (level_ == 0) return "Q";
    return parent_->describe() + "(sqrt(" + radicand_->debug_string() + "))";
}

// ---------------------------------------------------------------- AlgNum

AlgNum::AlgNum() : tower_(Tower::rationals()), c_(1) {}
AlgNum::AlgNum(long v) : tower_(Tower::rationals()), c_{mpq_class(v)} {}
AlgNum::AlgNum(const mpq_class& q) : tower_(Tower::rationals()), c_{q} { c_[0].canonicalize(); }

AlgNum::AlgNum(TowerPtr tower, std::vector<mpq_class> coeffs)
    : tower_(std::move(tower)), c_(std::move(coeffs)) {
    if (!tower_) tower_ = Tower::rationals();
    if (c_.size() != tower_->degree()) throw Error("coefficient vector does not match tower degree");
    for (auto& q : c_) q.canonicalize();
}

AlgNum AlgNum::radical(const TowerPtr& tower) {
    if (tower->level() == 0) throw Error("the rationals have no radical");
    Coeffs c(tower->degree());
    c[tower->degree() / 2] = 1;
    return AlgNum(tower, std::move(c));
}

int AlgNum::level() const noexcept { return tower_->level(); }
bool AlgNum::is_zero() const { return all_zero(c_); }
bool AlgNum::is_rational() const { return all_zero(CSpan(c_).subspan(1)); }

mpq_class AlgNum::to_rational() const {
    if (!is_rational()) throw Error("value is not rational");
    return c_[0];
}

AlgNum AlgNum::lifted(const TowerPtr& target) const {
    if (target.get() == tower_.get()) return *this;
    if (!target->extends(*tower_)) throw TowerMismatch("lift target does not contain the source tower");
    Coeffs c(target->degree());
    std::copy(c_.begin(), c_.end(), c.begin());
    return AlgNum(target, std::move(c));
}

AlgNum AlgNum::trimmed() const {
    int top = 0;
    for (std::size_t m = 0; m < c_.size(); ++m) {
        if (c_[m] == 0) continue;
        int hb = 0;
        for (std::size_t v = m; v; v >>= 1) ++hb;
        top = std::max(top, hb);
    }
    if (top == level()) return *this;
    TowerPtr t = tower_->prefix(top);
    return AlgNum(t, Coeffs(c_.begin(), c_.begin() + static_cast<long>(t->degree())));
}

int AlgNum::sign() const {
    if (is_rational()) return sgn(c_[0]);
    mpfr_prec_t prec = precision_seed();
    while (true) {
        Interval e = enclosure(prec);
        if (e.is_positive()) return 1;
        if (e.is_negative()) return -1;
        prec *= 2;
    }
}

Interval AlgNum::enclosure(mpfr_prec_t prec) const { return enclosure_raw(tower_.get(), c_, prec); }

double AlgNum::to_double() const {
    if (is_rational()) return c_[0].get_d();
    return enclosure(precision_seed()).mid_double();
}

AlgNum AlgNum::abs() const { return sign() < 0 ? -*this : *this; }

AlgNum AlgNum::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return AlgNum(tower_, inv_raw(tower_.get(), c_));
}

AlgNum AlgNum::pow(unsigned e) const {
    AlgNum result = AlgNum(1).lifted(tower_);
    AlgNum base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

mpq_class AlgNum::norm() const { return norm_raw(tower_.get(), c_); }

AlgNum AlgNum::operator-() const {
    AlgNum r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
    if (o.tower_.get() == tower_.get() || tower_->extends(*o.tower_)) {
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    auto [a, b] = unify(*this, o);
    *this = std::move(a);
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) { return *this += -o; }

AlgNum& AlgNum::operator*=(const AlgNum& o) {
    if (o.level() == 0) {
        for (auto& q : c_) q *= o.c_[0];
        return *this;
    }
    if (level() == 0) {
        const mpq_class s = c_[0];
        *this = o;
        for (auto& q : c_) q *= s;
        return *this;
    }
    auto [a, b] = unify(*this, o);
    c_ = mul_raw(a.tower_.get(), a.c_, b.c_);
    tower_ = a.tower_;
    return *this;
}

AlgNum& AlgNum::operator/=(const AlgNum& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (o.level() == 0) {
        for (auto& q : c_) q /= o.c_[0];
        return *this;
    }
    auto [a, b] = unify(*this, o);
    c_ = mul_raw(a.tower_.get(), a.c_, inv_raw(b.tower_.get(), b.c_));
    tower_ = a.tower_;
    return *this;
}

bool operator==(const AlgNum& a, const AlgNum& b) {
    if (a.tower_.get() == b.tower_.get()) return a.c_ == b.c_;
    auto [x, y] = unify(a, b);
    return x.c_ == y.c_;
}

std::string AlgNum::debug_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t m = 0; m < c_.size(); ++m) {
        if (c_[m] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[m].get_str();
        for (int i = 0; i < level(); ++i) {
            if (m & (std::size_t{1} << i)) os << "*r" << (i + 1);
        }
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------- towers

std::pair<AlgNum, AlgNum> unify(const AlgNum& a, const AlgNum& b) {
    if (a.tower().get() == b.tower().get()) return {a, b};
    if (a.tower()->extends(*b.tower())) return {a, b.lifted(a.tower())};
    if (b.tower()->extends(*a.tower())) return {a.lifted(b.tower()), b};
    auto j = join(a.tower(), b.tower());
    return {a.lifted(j->result), transport(b, *j)};
}

std::vector<AlgNum> unify_all(const std::vector<AlgNum>& xs) {
    if (xs.empty()) return {};
    TowerPtr t = Tower::rationals();
    for (const auto& x : xs) {
        if (t->extends(*x.tower())) continue;
        t = x.tower()->extends(*t) ? x.tower() : join(t, x.tower())->result;
    }
    std::vector<AlgNum> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(move_into(x, t));
    return out;
}

AlgNum move_into(const AlgNum& x, const TowerPtr& target) {
    if (target->extends(*x.tower())) return x.lifted(target);
    if (x.tower()->extends(*target)) return x;
    auto j = join(target, x.tower());
    return transport(x, *j);
}

std::optional<AlgNum> is_square(const AlgNum& x) {
    if (x.level() > 0 && !x.is_zero()) {
        // a square in K has a square norm down to Q
        if (!is_rational_square(x.norm(), nullptr)) return std::nullopt;
    }
    auto r = sqrt_in(x);
    if (r) return r->lifted(x.tower());
    return std::nullopt;
}

AlgNum sqrt_extend(const AlgNum& x) {
    const int s = x.sign();
    if (s < 0) throw NegativeRadicand();
    if (s == 0) return x;
    if (auto w = is_square(x)) return *w;
    TowerPtr t = x.tower()->extend(x);
    return AlgNum::radical(t);
}

// ---------------------------------------------------------------- polynomials

Poly minimal_polynomial(const AlgNum& x0) {
    const AlgNum x = x0.trimmed();
    if (x.level() == 0) return Poly({-x.coeffs()[0], mpq_class(1)});
    const std::size_t dim = x.tower()->degree();
    // echelon rows: reduced power vector, pivot, and combination of powers
    struct Row {
        Coeffs v;
        std::size_t pivot;
        Coeffs combo;
    };
    std::vector<Row> rows;
    AlgNum power = AlgNum(1).lifted(x.tower());
    for (std::size_t k = 0; k <= dim; ++k) {
        Coeffs v = power.coeffs();
        Coeffs combo(dim + 1);
        combo[k] = 1;
        for (const auto& r : rows) {
            if (v[r.pivot] == 0) continue;
            const mpq_class f = v[r.pivot] / r.v[r.pivot];
            for (std::size_t i = 0; i < dim; ++i) {
                if (r.v[i] != 0) v[i] -= f * r.v[i];
            }
            for (std::size_t i = 0; i <= dim; ++i) {
                if (r.combo[i] != 0) combo[i] -= f * r.combo[i];
            }
        }
        auto nz = std::find_if(v.begin(), v.end(), [](const mpq_class& q) { return q != 0; });
        if (nz == v.end()) {
            combo.resize(k + 1);
            return Poly(std::move(combo)).monic();
        }
        const auto pivot = static_cast<std::size_t>(nz - v.begin());
        rows.push_back({std::move(v), pivot, std::move(combo)});
        power *= x;
    }
    throw Error("minimal polynomial search failed");
}

bool is_algebraic_integer(const AlgNum& x) { return minimal_polynomial(x).is_integral(); }

AlgNum eval(const Poly& p, const AlgNum& x) {
    AlgNum acc = AlgNum(0).lifted(x.tower());
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + AlgNum(p.coeff(i));
    return acc;
}

int root_index(const Poly& p, const AlgNum& x) {
    auto chain = p.sturm_chain();
    std::vector<int> at_minus_inf;
    std::vector<int> at_x;
    for (const auto& q : chain) {
        const int s = sgn(q.leading());
        at_minus_inf.push_back(q.degree() % 2 == 0 ? s : -s);
        at_x.push_back(eval(q, x).sign());
    }
    return sign_variations(at_minus_inf) - sign_variations(at_x) - 1;
}

bool is_totally_real_element(const AlgNum& x) {
    Poly m = minimal_polynomial(x);
    return m.count_real_roots() == m.degree();
}

std::string value_key(const AlgNum& x) {
    if (x.is_rational()) return "q" + x.coeffs()[0].get_str();
    const AlgNum t = x.trimmed();
    auto ck = std::make_pair(t.tower().get(), coeff_key(t.coeffs()));
    {
        std::lock_guard lk(key_mu);
        auto it = key_cache().find(ck);
        if (it != key_cache().end()) return it->second.key;
    }
    Poly m = minimal_polynomial(t);
    std::string key = "a" + m.key() + "#" + std::to_string(root_index(m, t));
    std::lock_guard lk(key_mu);
    key_cache().emplace(ck, KeyCacheEntry{t.tower(), key});
    return key;
}

// ---------------------------------------------------------------- embeddings

bool Embedding::is_identity() const {
    return std::all_of(signs.begin(), signs.end(), [](int8_t s) { return s > 0; });
}

Embedding Embedding::restricted(int lvl) const {
    return Embedding{tower->prefix(lvl), std::vector<int8_t>(signs.begin(), signs.begin() + lvl)};
}

std::string Embedding::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i) s += ",";
        s += signs[i] > 0 ? "+" : "-";
    }
    return s + "]";
}

std::vector<Embedding> real_embeddings(const TowerPtr& tower) {
    if (tower->level() == 0) return {Embedding{tower, {}}};
    std::vector<Embedding> out;
    for (const auto& e : real_embeddings(tower->parent())) {
        AlgNum d = apply_embedding(tower->radicand(), e);
        if (d.sign() <= 0) continue;
        for (int8_t s : {int8_t{1}, int8_t{-1}}) {
            auto signs = e.signs;
            signs.push_back(s);
            out.push_back(Embedding{tower, std::move(signs)});
        }
    }
    return out;
}

bool is_totally_real(const TowerPtr& tower) { return real_embeddings(tower).size() == tower->degree(); }

AlgNum apply_embedding(const AlgNum& x, const Embedding& sigma) {
    if (!sigma.tower || sigma.signs.size() != static_cast<std::size_t>(sigma.tower->level()))
        throw InvalidEmbedding("malformed embedding");
    if (!sigma.tower->extends(*x.tower()))
        throw InvalidEmbedding("element does not lie in the embedding's tower");
    const int lvl = x.level();
    if (lvl == 0) return x;
    std::vector<int8_t> signs(sigma.signs.begin(), sigma.signs.begin() + lvl);
    TowerPtr img = x.tower()->conjugate(signs);
    Coeffs c = x.coeffs();
    for (std::size_t m = 0; m < c.size(); ++m) {
        int s = 1;
        for (int i = 0; i < lvl; ++i) {
            if ((m >> i) & 1U) s *= signs[static_cast<std::size_t>(i)];
        }
        if (s < 0) c[m] = -c[m];
    }
    return AlgNum(img, std::move(c));
}

bool is_totally_positive(const AlgNum& x0) {
    const AlgNum x = x0.trimmed();
    auto embs = real_embeddings(x.tower());
    if (embs.size() != x.tower()->degree()) throw NotTotallyRealTower();
    return std::all_of(embs.begin(), embs.end(),
                       [&](const Embedding& e) { return apply_embedding(x, e).sign() > 0; });
}

}  // namespace hypercox
