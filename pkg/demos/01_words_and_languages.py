"""Words of a forbidden-substring language.

A language is an ordered alphabet plus a finite set of forbidden factors.
A word belongs to it when its endless repetition avoids every forbidden
factor, including across the wrap-around seam.
"""

from debruijn_sft import Language, enumerate_words, estimate_growth_rate, is_circular_word

lang = Language.from_text("01", ("11",))
a = lang.alphabet

print("Language: binary, forbidding 11 (the golden-mean shift)")
print()

for text in ["01010", "10001", "0", "1"]:
    w = a.word(text)
    verdict = "in" if is_circular_word(lang, w) else "OUT"
    print(f"  {text:>6}  {verdict:>3}  (repetition {text * 3}...)")
print()
print("Note 10001 fails: the seam puts its last 1 next to its first 1.")
print("Note 1 fails too: 111... repeats the forbidden factor immediately.")
print()

for n in range(1, 9):
    words = enumerate_words(lang, n)
    print(f"  length {n}: {len(words):3d} words   {' '.join(a.text(w) for w in words[:8])}"
          + (" ..." if len(words) > 8 else ""))
print()
print("The counts 1, 3, 4, 7, 11, 18, ... follow the Lucas recurrence;")
print("their ratio approaches the growth rate of the language:")
print(f"  estimate at n=12: {estimate_growth_rate(lang, 12):.5f}  (golden ratio = 1.61803...)")
