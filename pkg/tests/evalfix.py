"""Frozen evaluation fixture shared by the unit and acceptance tests.

Five characters, three subjects, two candidate schemes.  Expected
numbers are hand-computed; per-character values are sums of the three
subject distances divided by three.

Scheme A (क=k ख=kh च=ch छ=chh ट=T):
    क: d(k,k)=0   d(k,k)=0   d(c,k)=1    -> 1/3
    ख: d(kh,kh)=0 d(kh,kh)=0 d(k,kh)=1   -> 1/3
    च: d(ch,ch)=0 d(c,ch)=1  d(chh,ch)=1 -> 2/3
    छ: d(chh,chh)=0 d(ch,chh)=1 d(cha,chh)=1 -> 2/3
    ट: d(t,T)=1   d(ta,T)=2  d(T,T)=0    -> 1
    weighted: .4/3 + .1/3 + .2*2/3 + .1*2/3 + .2 = 17/30
    uniform mean: (1/3 + 1/3 + 2/3 + 2/3 + 1)/5 = 3/5

Scheme B (क=q ख=x च=c छ=ch ट=tt):
    क: d(k,q)=1   d(k,q)=1   d(c,q)=1    -> 1
    ख: d(kh,x)=2  d(kh,x)=2  d(k,x)=1    -> 5/3
    च: d(ch,c)=1  d(c,c)=0   d(chh,c)=2  -> 1
    छ: d(chh,ch)=1 d(ch,ch)=0 d(cha,ch)=1 -> 2/3
    ट: d(t,tt)=1  d(ta,tt)=1 d(T,tt)=2   -> 4/3
    weighted: .4 + .1*5/3 + .2 + .1*2/3 + .2*4/3 = 11/10
    uniform mean: (1 + 5/3 + 1 + 2/3 + 4/3)/5 = 17/15
"""

RESPONSES = {
    "क": {"s1": "k", "s2": "k", "s3": "c"},
    "ख": {"s1": "kh", "s2": "kh", "s3": "k"},
    "च": {"s1": "ch", "s2": "c", "s3": "chh"},
    "छ": {"s1": "chh", "s2": "ch", "s3": "cha"},
    "ट": {"s1": "t", "s2": "ta", "s3": "T"},
}

WEIGHTS = {"क": 0.4, "ख": 0.1, "च": 0.2, "छ": 0.1, "ट": 0.2}

SCHEME_A = {"क": "k", "ख": "kh", "च": "ch", "छ": "chh", "ट": "T"}
SCHEME_B = {"क": "q", "ख": "x", "च": "c", "छ": "ch", "ट": "tt"}

PER_CHAR_A = {"क": 1 / 3, "ख": 1 / 3, "च": 2 / 3, "छ": 2 / 3, "ट": 1.0}
PER_CHAR_B = {"क": 1.0, "ख": 5 / 3, "च": 1.0, "छ": 2 / 3, "ट": 4 / 3}

WEIGHTED_A = 17 / 30
WEIGHTED_B = 11 / 10
UNIFORM_A = 3 / 5
UNIFORM_B = 17 / 15


def responses_tsv() -> str:
    lines = ["# charId\tsubjectId\tspelling"]
    for char_id, by_subject in RESPONSES.items():
        for subject_id, spelling in by_subject.items():
            lines.append("%s\t%s\t%s" % (char_id, subject_id, spelling))
    return "\n".join(lines) + "\n"


def scheme_tsv(proposed) -> str:
    return "".join("%s\t%s\n" % item for item in proposed.items())


def weights_tsv() -> str:
    return "".join("%s\t%s\n" % (c, w) for c, w in WEIGHTS.items())
