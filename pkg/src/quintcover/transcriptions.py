"""Transcribed closed-form displays.

These polynomials cannot be derived inside the package; they are the published
formulas that the derived pipelines are compared against.  Each entry is kept as
display text and parsed on demand.  A sha256 checksum per entry localizes any
accidental edit: `verify_checksums` names the entry whose text changed.

Conventions for the text: juxtaposition is multiplication, ``^`` is a power,
rational functions are stored as separate numerator and denominator entries.
"""

from __future__ import annotations

import hashlib
from functools import lru_cache

from .exactalg import MultiPoly, RatFunc, parse_poly

DISPLAYS: dict[str, str] = {
    # coefficients of the cubic g3(x) in Q[a, b, z]; the constant coefficient carries
    # a token "12ya" in the source (y is not a variable there) and is stored without it
    "g3.a0": (
        "-b^4(2b^3a + 4b^3 - 2zab^2 + 7b^2a^2 + 8zb^2 + 4b^2 + 16ab^2 + 16zba + 6a^3b + 8ba"
        " + 2za^2b + 12zb + 16ba^2 + 13za^2 + za^4 + 6za^3 + 4z)"
    ),
    "g3.a1": (
        "-b^2(12b^3 + 12b^4a + 32zba - 6a^4b^2 + 44b^2a^3 + 6ba^2 + 24ab^2 + 10a^3b + 44b^3a^2 + 2ba"
        " + 52b^3a + 61b^2a^2 - 12ba^5 - 7za^2 - 2za + 12zb - 4a^6 + 12b^4 - a^4 - 40za^3b^2 - 16zb^3a^2"
        " - 12za^5 + 36zb^2 - 18za^3 - 26za^4 + 56zab^2 + 4azb^3 + 2za^2b^2 - 20za^3b + 28za^2b"
        " + 2za^6 + 24zb^3 + 4zba^5 - 4a^5 - 32za^4b)"
    ),
    # the source closes one parenthesis more than it opens; the stray one is dropped
    "g3.a2": (
        "5b^2a^6 + 20b^2a^5 + 8ba^6 - 61b^4a^2 - 18b^5a - 56b^4a + 4zba + 5a^4b^2 - 18b^2a^3 - 24zb^4"
        " - 14zb^4a - 4ab^2 + 8b^3a^4 + 2b^3a^5 - 54b^3a^3 - 70b^3a^2 - 24b^3a - 14b^2a^2 + 4a^4b + 10ba^5"
        " - 6za^7 + 64za^3b^3 + 38za^4b^2 + 54za^3b^2 + 12zb^3a^2 - 14za^6b - 10zb^2a^5 - 4za^7b - 4a^6zb^2"
        " + 32a^2b^4z + 2a^7b - za^8 - 36zb^3 - 12za^5 - 12zb^2 - 4za^4 - 28zab^2 - 64azb^3 - 5za^2b^2"
        " + 16za^2b + 28za^4b - 4zba^5 - 13za^6 - 12b^5 - 12b^4 + 34za^3b"
    ),
    "g3.a3": (
        "(2a + 1)(za^4 - 2a^3b + 4za^3 + 6za^3b - 4ba^2 + 12za^2b^2 + 10za^2b - 9b^2a^2 + 5za^2"
        " - 2ba + 2za - 8ab^2 - 12b^3a + 8azb^3 - 4b^3 - 4zb - 4b^4 - 12zb^2 - 8zb^3)"
    ),
    # case II curve y^2 = x(x - 1)(b3 x^3 + b2 x^2 + b1 x + b0)
    "case2.b3": "(2a + 1)(-8 + 9a)^2",
    "case2.b2": "-27a^6 - 54a^5 + 468a^4 - 958a^3 + 381a^2 + 400a - 192",
    "case2.b1": "-18a^6 + 380a^5 - 1000a^4 + 726a^3 + 499a^2 - 752a + 192",
    "case2.b0": "(a + 8)^2(a - 1)^3(3a - 1)",
    "case2.nonvanishing": "a(9a - 8)(a + 8)(2a + 1)(3a - 1)(a - 1)(a - 2)",
    "case2.lambda.num": "(3a - 1)^3(a + 8)^2(a - 1)",
    "case2.lambda.den": "27a(a - 2)^5",
    "case2.z.num": "(3a - 1)(a - 1)",
    "case2.z.den": "2a + 1",
    # case I
    "case1.lambda.num": "4(2a + 1)^3(a^2 + 4a + 8)^2",
    "case1.lambda.den": "(2 - a)^5(a + 2)^3",
    "case1.z.num": "a(8 + a)",
    "case1.z.den": "4(2a + 1)",
    # case III curve y^2 = x(x - 1)(x - r)(x^2 - x - s) with r = z
    "case3.r.num": "a^2 + 2ab + 2a - 2b",
    "case3.r.den": "2(2a + 1)",
    "case3.s.num": "3a(a^2 - 4)",
    "case3.s.den": "4(2a + 1)(a - 4)",
    "case3.nonvanishing": "a(a^2 - 4)(2a + 1)(3a^3 - 12a - 1)(a - 4)(96a^5 - 400a^4 - 128a^3 + 800a^2 - 72a - 225)",
    "case3.locus": "a^3 + 4ba^2 + 4a^2 - 12ba + 4ab^2 + 4a - 16b - 16b^2",
    "case3.uv_line": "2u + v - 16",
    # absolute invariants along the case I curve, variable T
    "case1.J2": "5859375T^6 - 129843750T^5 - 31959375T^4 - 6330100T^3 - 54927T^2 + 12506T - 17",
    "case1.i1.num": (
        "45(200225830078125T^12 - 1719272460937500T^11 + 565236035156250T^10 - 54100617187500T^9"
        " + 13999178671875T^8 - 4261746675000T^7 + 606825435500T^6 - 54844543800T^5 + 4205965699T^4"
        " - 236021164T^3 + 6405914T^2 + 6116T - 211)"
    ),
    "case1.i2.num": (
        "135(6335270404815673828125T^18 + 113021224021911621093750T^17 - 137079483776092529296875T^16"
        " + 35382386975097656250000T^15 - 5727170209350585937500T^14 + 1661335117119140625000T^13"
        " - 438672743956054687500T^12 + 71535083209593750000T^11 - 9593401735688906250T^10"
        " + 1451100945145362500T^9 - 198805994903162250T^8 + 18781404045085680T^7"
        " - 1082976623440908T^6 + 34245258932328T^5 - 572847931740T^4 + 10845126800T^3"
        " - 380189355T^2 + 11646582T - 3107)"
    ),
    "case1.i3.num": "49766400T(9T - 1)^5(25T^2 + 6T + 1)^5(25T - 1)^7",
    "case1.j.num": (
        "(11390625T^8 + 1215000T^7 + 99900T^6 + 925032T^5 + 550T^4 + 40T^3 + 380T^2 - 40T + 1)^3"
    ),
    "case1.j.den": "4096T^5(25T - 1)^2(25T^2 + 6T + 1)^4(9T - 1)^6",
    # absolute invariants along the case II curve, variable T
    "case2.J2": "4375T^4 - 12850T^3 + 11457T^2 + 458T + 43",
    "case2.i1.num": (
        "-9(1953125T^8 + 100859375T^7 - 133684375T^6 - 17761750T^5 + 60906155T^4 - 14020705T^3"
        " + 115631T^2 - 46816T - 256)"
    ),
    "case2.i2.num": (
        "-27(96435546875T^12 - 4709765625000T^11 + 10970742187500T^10 + 4833343750000T^9"
        " - 31399133343750T^8 + 30923034102000T^7 - 13348926086820T^6 + 3049853644080T^5"
        " - 409782059325T^4 + 10407596440T^3 + 1223394432T^2 - 18880512T + 32768)"
    ),
    "case2.i2.den_const": "8",
    "case2.i3.num": "-59049T^2(25T - 1)^5(25T - 16)^5(T - 1)^7",
    "case2.i3.den_const": "4096",
    "case2.j.num": "(9765625T^6 - 23437500T^5 + 19218750T^4 - 6087500T^3 + 560625T^2 + 166368T + 256)^3",
    "case2.j.den": "729T(T - 1)^2(25T - 16)^4(25T - 1)^6",
    # values of T (cases I, II) and a (case III) with an extra involution
    "case1.v4": (
        "(5625T^3 - 650T^2 + 73T + 8)(1265625T^4 - 67500T^3 + 89550T^2 + 516T + 1)"
        "(625T^3 - 25T^2 - 9T + 1)(5625T^5 + 18075T^4 + 8282T^3 + 918T^2 - 131T - 1)"
        "(109375T^5 + 18125T^4 - 12450T^3 + 1186T^2 - 13T + 1)(7119140625T^7 + 6391406250T^6"
        " + 2582859375T^5 + 476007500T^4 + 19626975T^3 - 1411606T^2 + 257473T - 4096)"
        "(158203125000T^9 + 85869140625T^8 + 32415625000T^7 + 6116187500T^6 + 74885000T^5"
        " - 94007050T^4 - 7398504T^3 + 1091468T^2 + 48T + 1)"
    ),
    "case2.v4": (
        "(25T^2 + 34T + 13)(25T^2 - 26T + 10)(15625T^3 - 3750T^2 - 6075T + 32)"
        "(225T^3 - 634T^2 - 151T - 16)(625T^4 - 800T^3 + 156T^2 + 74T - 1)"
        "(625T^5 + 22325T^4 + 892131T^3 - 338857T^2 + 48160T - 2304)(421875T^6"
        " + 2402500T^5 - 6942350T^4 + 5673748T^3 - 1488397T^2 - 20464T - 256)"
    ),
    "case3.v4": (
        "(24a^5 - 84a^4 - 144a^3 + 328a^2 + 220a + 17)(96a^5 - 400a^4 - 131a^3 + 800a^2 - 60a - 224)^2"
        "(72a^5 - 316a^4 + 16a^3 + 472a^2 - 292a - 241)^2(9a^6 - 72a^4 - 6a^3 + 152a^2 - 4a - 15)"
        "(9216a^10 - 76800a^9 + 136000a^8 + 252832a^7 - 634615a^6 - 184640a^5 + 824616a^4 - 57222a^3"
        " - 340360a^2 + 30348a + 47025)(216a^11 + 1548a^10 - 20688a^9 + 25776a^8 + 133824a^7"
        " - 190976a^6 - 286296a^5 + 289508a^4 + 231440a^3 - 65056a^2 - 58032a - 6975)(27648a^13"
        " - 230400a^12 + 295680a^11 + 1689600a^10 - 3531264a^9 - 3711808a^8 + 10386272a^7"
        " + 2095872a^6 - 11895424a^5 + 1027312a^4 + 5156035a^3 - 398800a^2 - 849036a - 61696)"
        "(648a^14 + 4644a^13 - 64656a^12 + 58320a^11 + 658152a^10 - 935328a^9 - 2364128a^8"
        " + 3266608a^7 + 3718976a^6 - 3536792a^5 - 2448532a^4 + 439027a^3 + 404320a^2"
        " + 174132a + 57600)"
    ),
    # the w-relation c2 w^2 + c1 w + c0 over Q[u, v]
    "w.c2": "64v^2(u - 4v + 1)^2",
    "w.c1": (
        "-4v(-272v^2u - 20vu^2 + 2592v^3 - 4672v^2 + 4u^3 + 16v^3u^2 - 15vu^4"
        " - 96v^2u^2 + 24v^2u^3 + 2u^5 - 12u^4 + 92vu^3 + 576vu - 128v^4 - 288v^3u)"
    ),
    "w.c0": "(u^2 + 4vu + 4v^2 - 48v)^3",
    "w.delta": "16(v - 16 + 2u)(2u^3 + u^2v - 36uv - 16v^2 - 108v)(u - 4v - 2)^2(16v - 4uv + u^2)^2v^2",
    "y3bar.j": "702595369/72900",
}

CHECKSUMS: dict[str, str] = {}  # filled in below from _PINNED


def checksum(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def verify_checksums() -> list[str]:
    """Names of entries whose text no longer matches its pinned checksum."""
    bad = [k for k, v in DISPLAYS.items() if CHECKSUMS.get(k) != checksum(v)]
    bad += [k for k in CHECKSUMS if k not in DISPLAYS]
    return sorted(bad)


@lru_cache(maxsize=None)
def poly(name: str) -> MultiPoly:
    return parse_poly(DISPLAYS[name])


def ratfunc(name: str) -> RatFunc:
    """The rational function stored as ``name.num`` / ``name.den``."""
    return RatFunc(poly(name + ".num"), poly(name + ".den"), reduce=False)


_PINNED = """
g3.a0=2a5e0d415433337c1cc03895092e7d76c4fa3cedc1a97b83daa13ee414a0850c
g3.a1=89c8f1bdf78126c4cd18fceffd3978786f042435becec35fbc688a295f2172a6
g3.a2=383de9409569c879fcb92b25ae6246227ddc803b78a93b7ca93ffd94f2d20c6a
g3.a3=fe234227c120412e118d23959fc8e26e71d570d65c200e11f20aecc4b47e5610
case2.b3=f548187fa4396935479b936ff77499db94d6748b8af671ac8c27ae3ef48a99a1
case2.b2=b05b8d5c4cdf5dbeb341687d98d98c7d5468ddddb30ea3af296397a56c637587
case2.b1=879c04b86eb11acb2e3e1505e5ffcb52e7900426afea936ee29c7b7d7996fd6b
case2.b0=f81c5a2220a443c2bad9348ae92452ed8c7889f677751bddb9d28443c0b50e1f
case2.nonvanishing=93c67b8fc478cc13cde54f5e79e981f7efb41876b3313e4ab199e5c2e95491df
case2.lambda.num=a50b5b8ff1aa43d0fc03110ee6b282cc9d4dda7d1e83129d425b25800f4bb171
case2.lambda.den=a6510ca34b8665a1cc8e2ef6bb788759e973e489d09ee0fca615c2150e2d5e0d
case2.z.num=77fc5e927e2122081bc542285fd89e873fbfb2c6d1cbbf16aca8c9f0987d7235
case2.z.den=25a88eae1b711ae3fdc9be68c3565519c4f7b4b89eb10fa560f280541db6b8b4
case1.lambda.num=cad9922f8820e0104553a71ccdec20ca97e435cc901582f231552c82f3291cbf
case1.lambda.den=b6b8a5a0078d0bdd5839a57a308d6b3f29d65df1dd3945798ccfec37163ad543
case1.z.num=70f3716c8e5aa59d54a40eaa4e13c8fc824daf9e43c5397da781200cb60d11e1
case1.z.den=ca6cd871ecf3dad35a70c392f62047681a1b9a05c942bdfa2baae7766472ba5e
case3.r.num=2c2326c083f6363731c0e6dedb85094e15b3d39a9a712e54e7c75f951ff41b0a
case3.r.den=7fbdb5e2b87b5cc931804a114fb6e6a9779d7bdcbb6041c68962b0d9502b1775
case3.s.num=cd7521258c95b144a352242c2a2cefc35df1a7b51b8208016fedf17b89269fb2
case3.s.den=4a28f789df6dfeee143bf6b37f57538ceb749c499c4f251d57e0e674c7a16ee9
case3.nonvanishing=9fa4e9673a5c49bef61bc5d8a044571f581987f681b7933ab502c6b11deb0f66
case3.locus=a4a2b8e73ee25e73121f05a4aee0eee05cf577d2547364226877b8380d3a523f
case3.uv_line=3a7a1c3002d1b4926a390b967816f3a32fca537d47a014a1018c71172792cfc8
case1.J2=2b47e738da3fa57e130eb8c48f88303db2f69f4aa589cf93995597d6a5e360b9
case1.i1.num=3c4594bb851a0e3ae1ab15a74684a0a5f5f64e42d05bd0b0d1c02238cff9ce41
case1.i2.num=75ef49901c8ae1f569e311032b69d831d31606ddbd640a19f98f07bfb0867dd1
case1.i3.num=141be2446fcd07eedc72867d2685c3b492aec883431a448be29b2d949df73e37
case1.j.num=5afb8c34d51dffb5395cc115abeae6feca5263ce3b601061343ab9529d39d6ba
case1.j.den=456e00ab46e2f1d746305932759cdb0023b9950bf982eb2f1e9e73b3bf220b6a
case2.J2=3a45c32ba3926bec9e3a72f8f78c6a92bf6b43cf88edda8dd709e1e18b321c1f
case2.i1.num=38280b794355331e2b61df0ebbcbe54d738e4e62f87a8c849923e41bd4980797
case2.i2.num=18c2a268598fe7ada1f2d70c5345d997c1007899e8c572bf95c0ae609efbf700
case2.i2.den_const=2c624232cdd221771294dfbb310aca000a0df6ac8b66b696d90ef06fdefb64a3
case2.i3.num=1f719b1059d2261585cbef8f8ded9ac388b21c19c6251a0cf3bdc953b50fb276
case2.i3.den_const=8b926d75599a618e21f1341318e66517be26e18cc7496783d2b59758c1333be8
case2.j.num=74f1fd379b64830f89278463c4648d11ae0b869917c724ff946acf0e14c345bf
case2.j.den=0960890841ccbdb557e1091dcc0f8a9409aad1febe6ddaa536fad9c56d8de30a
case1.v4=46c714b30d2b61a7aefd026f1367c4cfa5d4219b7c128fd51bfd4b9c40a5069b
case2.v4=c921a29c0935643bfbe9a075f321ecd7cac59a5036e79bb6eda377c19311bcbd
case3.v4=8341ff084a62732e548ce4860c0d391e009c733b001a208a36a84e2824e6fc2b
w.c2=be1ffa5d30d4902f3dfb32b7be7c6a415a7ee8476eb66ead11e829b255efd412
w.c1=8a40a24c8e922abff5dc45e6480f97b5d60b760ac7ce8d797d33ca214c463d0c
w.c0=e449d022b94f9d30252dee55eb01ae526dea04587a8210385d122e45ac516bda
w.delta=1cde0a6fa77fabbf4cf76b0dc0a093cb298366bf73a96c4effae4116de6739f3
y3bar.j=a707772e8df22c61e8abcd1246e5fc8ab64e5627579cf69c24af880a1fadcedc
"""

for _line in _PINNED.split():
    _k, _h = _line.split("=")
    CHECKSUMS[_k] = _h
