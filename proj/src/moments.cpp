#include "simcore/moments.hpp"

#include <stdexcept>

namespace simcore {

QPolynomial probability_generating_function(const QPolynomial& f) {
    if (f.is_zero())
        throw std::domain_error("probability_generating_function: zero polynomial");
    return f.scaled(Rational(1) / f.value_at_one());
}

std::vector<Rational> raw_moments(const QPolynomial& f, int max_order) {
    if (f.is_zero()) throw std::domain_error("raw_moments: zero polynomial");
    if (max_order < 0) throw std::invalid_argument("raw_moments: negative order");
    const Rational total = f.value_at_one();
    if (total.is_zero()) throw std::domain_error("raw_moments: weights sum to zero");
    std::vector<Rational> out(max_order + 1, Rational(0));
    for (const auto& [n, c] : f.terms()) {
        Rational p(1);
        const Rational nn(n);
        for (int r = 0; r <= max_order; ++r) {
            out[r] += c * p;
            p *= nn;
        }
    }
    for (auto& v : out) v /= total;
    return out;
}

std::vector<Rational> central_from_raw(const std::vector<Rational>& raw) {
    if (raw.empty() || raw[0] != Rational(1))
        throw std::invalid_argument("central_from_raw: raw[0] must be 1");
    const int R = static_cast<int>(raw.size()) - 1;
    const Rational mean = R >= 1 ? raw[1] : Rational(0);
    std::vector<Rational> out(R + 1, Rational(0));
    for (int k = 0; k <= R; ++k) {
        Rational acc(0);
        for (int i = 0; i <= k; ++i)
            acc += binomial(Integer(static_cast<long>(k)), static_cast<unsigned long>(i)) *
                   (-mean).pow(k - i) * raw[i];
        out[k] = acc;
    }
    return out;
}

std::vector<Rational> raw_from_central(const std::vector<Rational>& central,
                                       const Rational& mean) {
    if (central.empty() || central[0] != Rational(1))
        throw std::invalid_argument("raw_from_central: central[0] must be 1");
    const int R = static_cast<int>(central.size()) - 1;
    std::vector<Rational> out(R + 1, Rational(0));
    for (int k = 0; k <= R; ++k) {
        Rational acc(0);
        for (int i = 0; i <= k; ++i)
            acc += binomial(Integer(static_cast<long>(k)), static_cast<unsigned long>(i)) *
                   mean.pow(k - i) * central[i];
        out[k] = acc;
    }
    return out;
}

Radical MomentSet::standardized(int k) const {
    if (k < 3 || k > max_order)
        throw std::invalid_argument("standardized: k must be in 3..max_order");
    return Radical::standardized(central.at(k), central.at(2), k);
}

MomentSet moments_from_polynomial(const QPolynomial& f, int max_order) {
    MomentSet m;
    m.max_order = max_order;
    m.count = Integer(0);
    for (const auto& [n, c] : f.terms()) {
        if (!c.is_integer() || c.sign() < 0)
            throw std::domain_error("moments_from_polynomial: not a counting polynomial");
        m.count += c.numerator();
    }
    m.raw = raw_moments(f, max_order);
    m.central = central_from_raw(m.raw);
    return m;
}

MomentSet core_moments(const CorePair& c, int max_order, Engine engine,
                       const Convention& conv) {
    if (engine == Engine::Full)
        return moments_from_polynomial(size_generating_polynomial(c, conv), max_order);
    JetMoments jm = jet_moments(c, max_order, conv);
    MomentSet m;
    m.max_order = max_order;
    m.count = jm.count;
    m.raw = jm.raw;
    m.central = central_from_raw(m.raw);
    return m;
}

namespace {

BivariatePolynomial parse_product(const Rational& scale,
                                  const std::vector<const char*>& factors) {
    BivariatePolynomial acc = BivariatePolynomial::constant(scale);
    for (const char* f : factors) acc = acc * BivariatePolynomial::parse(f);
    return acc;
}

/* The nine closed forms, embedded in their published factored shape. */
std::vector<BivariatePolynomial> build_theorems() {
    std::vector<BivariatePolynomial> T(10);

    T[1] = parse_product(Rational(1, 24), {"s-1", "t-1", "s+t+1"});

    T[2] = parse_product(Rational(1, 1440), {"s", "t", "t-1", "s-1", "s+t+1", "s+t"});

    T[3] = parse_product(Rational(1, 60480),
                         {"s", "t", "t-1", "s-1", "s+t+1", "s+t",
                          "2*s^2*t+2*s*t^2-3*s^2-3*s*t-3*t^2-3"});

    T[4] = parse_product(
        Rational(1, 4838400),
        {"s", "t", "t-1", "s-1", "s+t+1", "s+t",
         "19*s^4*t^2+38*s^3*t^3+19*s^2*t^4-51*s^4*t-102*s^3*t^2-102*s^2*t^3-51*s*t^4"
         "+36*s^4+72*s^3*t+108*s^2*t^2+72*s*t^3+36*t^4-33*s^2*t-33*s*t^2"
         "+36*s^2+36*s*t+36*t^2+120"});

    T[5] = parse_product(
        Rational(1, 95800320),
        {"s", "t", "t-1", "s-1", "s+t+1", "s+t",
         "46*s**6*t**3+138*s**5*t**4+138*s**4*t**5+46*s**3*t**6"
         "-211*s**6*t**2-633*s**5*t**3-844*s**4*t**4-633*s**3*t**5-211*s**2*t**6"
         "+333*s**6*t+999*s**5*t**2+1665*s**4*t**3+1665*s**3*t**4+999*s**2*t**5+333*s*t**6"
         "-180*s**6-540*s**5*t-1283*s**4*t**2-1666*s**3*t**3-1283*s**2*t**4-540*s*t**5"
         "-180*t**6+420*s**4*t+840*s**3*t**2+840*s**2*t**3+420*s*t**4-180*s**4-360*s**3*t"
         "-540*s**2*t**2-360*s*t**3-180*t**4+327*s**2*t+327*s*t**2-180*s**2-180*s*t"
         "-180*t**2-3780"});

    T[6] = parse_product(
        Rational(Integer(1), Integer("4184557977600")),
        {"s", "t", "t-1", "s-1", "s+t+1", "s+t",
         "307561*s**8*t**4+1230244*s**7*t**5+1845366*s**6*t**6+1230244*s**5*t**7"
         "+307561*s**4*t**8-2056306*s**8*t**3-8225224*s**7*t**4-14394142*s**6*t**5"
         "-14394142*s**5*t**6-8225224*s**4*t**7-2056306*s**3*t**8+5372061*s**8*t**2"
         "+21488244*s**7*t**3+42976488*s**6*t**4+53720610*s**5*t**5+42976488*s**4*t**6"
         "+21488244*s**3*t**7+5372061*s**2*t**8-6453396*s**8*t-25813584*s**7*t**2"
         "-60704054*s**6*t**3-91764618*s**5*t**4-91764618*s**4*t**5-60704054*s**3*t**6"
         "-25813584*s**2*t**7-6453396*s*t**8+2985120*s**8+11940480*s**7*t"
         "+39743142*s**6*t**2+77437746*s**5*t**3+96285048*s**4*t**4+77437746*s**3*t**5"
         "+39743142*s**2*t**6+11940480*s*t**7+2985120*t**8-11104272*s**6*t"
         "-33312816*s**5*t**2-55521360*s**4*t**3-55521360*s**3*t**4-33312816*s**2*t**5"
         "-11104272*s*t**6+2985120*s**6+8955360*s**5*t+23840061*s**4*t**2"
         "+32754522*s**3*t**3+23840061*s**2*t**4+8955360*s*t**5+2985120*t**6"
         "-9109476*s**4*t-18218952*s**3*t**2-18218952*s**2*t**3-9109476*s*t**4"
         "+2985120*s**4+5970240*s**3*t+8955360*s**2*t**2+5970240*s*t**3+2985120*t**4"
         "+8664840*s**2*t+8664840*s*t**2-62687520*s**2-62687520*s*t-62687520*t**2"
         "+626875200"});

    T[7] = parse_product(
        Rational(Integer(1), Integer("149448499200")),
        {"s**2", "s-1", "s-2", "2*s+1",
         "124496*s**14-527660*s**13-127268*s**12+2133077*s**11"
         "+1565655*s**10-3928575*s**9-7848989*s**8-3573289*s**7"
         "+7257797*s**6+16741975*s**5+16528197*s**4+3583272*s**3"
         "-67819248*s**2-18541440*s+138620160",
         "s+1", "s+1"});

    T[8] = parse_product(
        Rational(Integer(1), Integer("914624815104000")),
        {"s**2", "s-1", "2*s+1",
         "308851624*s**18-2759073420*s**17+7345195650*s**16+1614779679*s**15"
         "-27716691813*s**14-3203324556*s**13+61922226136*s**12"
         "+52270343442*s**11-49025878614*s**10-146716496688*s**9"
         "-153171599682*s**8-30342055161*s**7"
         "+158893451131*s**6-165853921776*s**5+1073038790016*s**4"
         "+9260929255680*s**3-11293714925568*s**2-19188060088320*s+21924617379840",
         "s+1", "s+1"});

    T[9] = parse_product(
        Rational(Integer(1), Integer("182467650613248000")),
        {"s**2", "s-1", "s-2", "2*s+1",
         "28092743584*s**20-284614603048*s**19+908242721124*s**18-87722680542*s**17"
         "-4040707469643*s**16+1347179583168*s**15+11350317109273*s**14"
         "+4824122583716*s**13-15816684214230*s**12-31535118689736*s**11"
         "-29475404073738*s**10+2671156715274*s**9+63014451511513*s**8"
         "+79700408583680*s**7+45859575725901*s**6-377516262865248*s**5"
         "+6309067352294376*s**4+10737857697068736*s**3-38301852570773760*s**2"
         "-26103018295756800*s+48704747653094400",
         "s+1", "s+1"});

    /* Spot-check every entry against independently computed reference values
     * before anything downstream may use it: (3,5) for the bivariate six,
     * brute-force (s,s+1) values at s = 2, 3 for the univariate three. */
    const Rational s3(3), t5(5);
    const Rational expect16[] = {Rational(3),      Rational(6),       Rational(90, 7),
                                 Rational(726, 7), Rational(2850, 7), Rational(2346)};
    for (int id = 1; id <= 6; ++id)
        if (T[id].evaluate(s3, t5) != expect16[id - 1])
            throw std::logic_error("theorem_polynomial: self-check failed for id " +
                                   std::to_string(id));
    struct {
        int id;
        long long s;
        Rational expect;
    } const uni_checks[] = {{7, 2, Rational(0)},       {7, 3, Rational(2058, 5)},
                            {8, 2, Rational(1, 256)},  {8, 3, Rational(6818, 5)},
                            {9, 2, Rational(0)},       {9, 3, Rational(3834)}};
    for (const auto& chk : uni_checks)
        if (T[chk.id].evaluate(Rational(chk.s), Rational(0)) != chk.expect)
            throw std::logic_error("theorem_polynomial: self-check failed for id " +
                                   std::to_string(chk.id));
    return T;
}

}  // namespace

const BivariatePolynomial& theorem_polynomial(int id) {
    static const std::vector<BivariatePolynomial> T = build_theorems();
    if (id < 1 || id > 9)
        throw std::invalid_argument("theorem_polynomial: id must be in 1..9");
    return T[id];
}

Rational theorem_value(int id, const CorePair& c) {
    require_valid(c);
    if (id >= 7 && c.t != c.s + 1)
        throw std::invalid_argument("theorem_value: ids 7..9 require t = s+1");
    return theorem_polynomial(id).evaluate(Rational(c.s), Rational(c.t));
}

VerifyResult verify_theorem(int id, const std::vector<CorePair>& pairs, Engine engine) {
    if (id < 1 || id > 9)
        throw std::invalid_argument("verify_theorem: id must be in 1..9");
    VerifyResult out;
    out.id = id;
    for (const CorePair& c : pairs) {
        VerifyRow row;
        row.pair = c;
        row.expected = theorem_value(id, c);
        MomentSet m = core_moments(c, id == 1 ? 1 : id, engine);
        row.actual = (id == 1) ? m.mean() : m.central.at(id);
        row.match = row.actual == row.expected;
        out.all_match = out.all_match && row.match;
        out.rows.push_back(std::move(row));
    }
    return out;
}

Radical limiting_standardized_moment(int r, long long diff_c) {
    if (r < 3 || r > 9)
        throw std::invalid_argument("limiting_standardized_moment: r must be in 3..9");
    if (diff_c < 1)
        throw std::invalid_argument("limiting_standardized_moment: diff_c must be >= 1");
    if (r >= 7 && diff_c != 1)
        throw std::invalid_argument(
            "limiting_standardized_moment: r in 7..9 is only available along t = s+1");
    const Rational Lr =
        theorem_polynomial(r).substitute_t_s_plus(diff_c).leading_coeff_in_s();
    const Rational L2 =
        theorem_polynomial(2).substitute_t_s_plus(diff_c).leading_coeff_in_s();
    return Radical::standardized(Lr, L2, r);
}

}  // namespace simcore
