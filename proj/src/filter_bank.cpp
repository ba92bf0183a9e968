#include <array>
#include <vector>

#include "lipdist/error.hpp"
#include "lipdist/wavelet.hpp"

namespace lipdist {

namespace {

// Minimum-phase Daubechies low-pass taps, sum = sqrt(2); generated by
// spectral factorization at 60-digit precision.
const std::array<std::vector<double>, 9> kDaubechiesTaps = {{
    // p = 2
    {4.829629131445341433749e-1,
     8.365163037378079055753e-1,
     2.24143868042013381026e-1,
     -1.294095225512603811744e-1},
    // p = 3
    {3.326705529500826159985e-1,
     8.068915093110925764945e-1,
     4.598775021184915700952e-1,
     -1.350110200102545886964e-1,
     -8.544127388202666169282e-2,
     3.522629188570953660274e-2},
    // p = 4
    {2.303778133088965008633e-1,
     7.148465705529156470899e-1,
     6.308807679298589078817e-1,
     -2.798376941685985421141e-2,
     -1.870348117190930840796e-1,
     3.084138183556076362722e-2,
     3.288301166688519973541e-2,
     -1.059740178506903210488e-2},
    // p = 5
    {1.601023979741929144807e-1,
     6.038292697971896705401e-1,
     7.243085284377729277281e-1,
     1.384281459013207315054e-1,
     -2.422948870663820318626e-1,
     -3.224486958463837464848e-2,
     7.757149384004571352313e-2,
     -6.241490212798274274191e-3,
     -1.258075199908199946851e-2,
     3.335725285473771277998e-3},
    // p = 6
    {1.115407433501094636213e-1,
     4.946238903984530856772e-1,
     7.511339080210953506789e-1,
     3.15250351709197629086e-1,
     -2.262646939654398200763e-1,
     -1.297668675672619355623e-1,
     9.750160558732304910234e-2,
     2.752286553030572862554e-2,
     -3.158203931748602956508e-2,
     5.538422011614961392519e-4,
     4.777257510945510639636e-3,
     -1.077301085308479564853e-3},
    // p = 7
    {7.785205408500917901996e-2,
     3.96539319481917306539e-1,
     7.291320908462351199169e-1,
     4.697822874051931224716e-1,
     -1.439060039285649754051e-1,
     -2.240361849938749826381e-1,
     7.130921926683026475088e-2,
     8.061260915108307191292e-2,
     -3.802993693501441357959e-2,
     -1.657454163066688065411e-2,
     1.255099855609984061299e-2,
     4.295779729213665211321e-4,
     -1.801640704047490915268e-3,
     3.537137999745202484463e-4},
    // p = 8
    {5.441584224310400995501e-2,
     3.128715909142999706592e-1,
     6.756307362972898068078e-1,
     5.853546836542067127713e-1,
     -1.582910525634930566738e-2,
     -2.840155429615469265162e-1,
     4.724845739132827703606e-4,
     1.28747426620478458857e-1,
     -1.736930100180754616962e-2,
     -4.408825393079475150676e-2,
     1.398102791739828164872e-2,
     8.746094047405776716383e-3,
     -4.870352993451574310422e-3,
     -3.917403733769470462981e-4,
     6.754494064505693663695e-4,
     -1.174767841247695337306e-4},
    // p = 9
    {3.80779473638783465887e-2,
     2.43834674612590353732e-1,
     6.048231236901111119031e-1,
     6.572880780513005380782e-1,
     1.33197385825007576191e-1,
     -2.932737832791749088064e-1,
     -9.684078322297646051351e-2,
     1.485407493381063801351e-1,
     3.072568147933337921232e-2,
     -6.763282906132997367564e-2,
     2.509471148314519575872e-4,
     2.236166212367909720537e-2,
     -4.723204757751397277926e-3,
     -4.281503682463429834497e-3,
     1.847646883056226476619e-3,
     2.303857635231959672052e-4,
     -2.51963188942710136975e-4,
     3.934732031627159948069e-5},
    // p = 10
    {2.667005790055555358662e-2,
     1.881768000776914890209e-1,
     5.272011889317255864817e-1,
     6.884590394536035657419e-1,
     2.811723436605774607487e-1,
     -2.498464243273153794161e-1,
     -1.959462743773770435043e-1,
     1.273693403357932600827e-1,
     9.305736460357235116035e-2,
     -7.139414716639708714534e-2,
     -2.945753682187581285828e-2,
     3.321267405934100173976e-2,
     3.606553566956169655423e-3,
     -1.073317548333057504432e-2,
     1.395351747052901165789e-3,
     1.992405295185056117159e-3,
     -6.858566949597116265614e-4,
     -1.164668551292854509515e-4,
     9.358867032006959133405e-5,
     -1.326420289452124481244e-5},
}};

}  // namespace

FilterBank filter_bank(int vanishing_moments) {
  if (vanishing_moments < 2 || vanishing_moments > 10)
    throw ValidationError("vanishing moments must lie in [2, 10]");
  FilterBank bank;
  bank.vanishing_moments = vanishing_moments;
  bank.low = kDaubechiesTaps[static_cast<std::size_t>(vanishing_moments - 2)];
  const std::size_t len = bank.low.size();
  bank.high.resize(len);
  for (std::size_t k = 0; k < len; ++k)
    bank.high[k] = (k % 2 == 0 ? 1.0 : -1.0) * bank.low[len - 1 - k];
  return bank;
}

}  // namespace lipdist
