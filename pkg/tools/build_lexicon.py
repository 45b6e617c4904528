#!/usr/bin/env python3
"""Generate the bundled English pronunciation lexicon fixture.

Writes tests/data/lexicon_en.dict in CMU format from a hand-checked base
table plus regular inflections (-s, -ed, -ing) derived with standard
voicing rules.  Rerun after editing BASE or ALTERNATES.
"""

from __future__ import annotations

from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "lexicon_en.dict"

SIBILANTS = {"S", "Z", "SH", "CH", "JH", "ZH"}
VOICELESS = {"P", "T", "K", "F", "TH", "S", "SH", "CH"}

# word -> (pronunciation, inflection tags). Tags: s = plural/3sg, d = -ed,
# g = -ing. Irregular or doubling forms are entered explicitly instead.
BASE: dict[str, tuple[str, str]] = {
    # articles, pronouns, function words
    "a": ("AH0", ""),
    "an": ("AE1 N", ""),
    "the": ("DH AH0", ""),
    "and": ("AH0 N D", ""),
    "of": ("AH1 V", ""),
    "to": ("T UW1", ""),
    "in": ("IH0 N", ""),
    "on": ("AA1 N", ""),
    "at": ("AE1 T", ""),
    "it": ("IH1 T", ""),
    "i": ("AY1", ""),
    "you": ("Y UW1", ""),
    "he": ("HH IY1", ""),
    "she": ("SH IY1", ""),
    "we": ("W IY1", ""),
    "me": ("M IY1", ""),
    "us": ("AH1 S", ""),
    "him": ("HH IH1 M", ""),
    "her": ("HH ER1", ""),
    "his": ("HH IH1 Z", ""),
    "hers": ("HH ER1 Z", ""),
    "its": ("IH1 T S", ""),
    "they": ("DH EY1", ""),
    "them": ("DH EH1 M", ""),
    "their": ("DH EH1 R", ""),
    "there": ("DH EH1 R", ""),
    "here": ("HH IY1 R", ""),
    "where": ("W EH1 R", ""),
    "who": ("HH UW1", ""),
    "whom": ("HH UW1 M", ""),
    "what": ("W AH1 T", ""),
    "why": ("W AY1", ""),
    "how": ("HH AW1", ""),
    "which": ("W IH1 CH", ""),
    "with": ("W IH1 DH", ""),
    "without": ("W IH0 TH AW1 T", ""),
    "within": ("W IH0 DH IH1 N", ""),
    "was": ("W AA1 Z", ""),
    "were": ("W ER1", ""),
    "are": ("AA1 R", ""),
    "is": ("IH1 Z", ""),
    "am": ("AE1 M", ""),
    "be": ("B IY1", ""),
    "been": ("B IH1 N", ""),
    "being": ("B IY1 IH0 NG", ""),
    "have": ("HH AE1 V", ""),
    "has": ("HH AE1 Z", ""),
    "had": ("HH AE1 D", ""),
    "having": ("HH AE1 V IH0 NG", ""),
    "will": ("W IH1 L", ""),
    "would": ("W UH1 D", ""),
    "could": ("K UH1 D", ""),
    "should": ("SH UH1 D", ""),
    "can": ("K AE1 N", ""),
    "cannot": ("K AE1 N AA0 T", ""),
    "must": ("M AH1 S T", ""),
    "might": ("M AY1 T", ""),
    "shall": ("SH AE1 L", ""),
    "may": ("M EY1", ""),
    "do": ("D UW1", ""),
    "does": ("D AH1 Z", ""),
    "did": ("D IH1 D", ""),
    "done": ("D AH1 N", ""),
    "not": ("N AA1 T", ""),
    "no": ("N OW1", ""),
    "nor": ("N AO1 R", ""),
    "yes": ("Y EH1 S", ""),
    "none": ("N AH1 N", ""),
    "nothing": ("N AH1 TH IH0 NG", ""),
    "something": ("S AH1 M TH IH0 NG", ""),
    "everything": ("EH1 V R IY0 TH IH2 NG", ""),
    "anything": ("EH1 N IY0 TH IH2 NG", ""),
    "for": ("F AO1 R", ""),
    "from": ("F R AH1 M", ""),
    "into": ("IH1 N T UW0", ""),
    "over": ("OW1 V ER0", ""),
    "under": ("AH1 N D ER0", ""),
    "above": ("AH0 B AH1 V", ""),
    "below": ("B IH0 L OW1", ""),
    "again": ("AH0 G EH1 N", ""),
    "against": ("AH0 G EH1 N S T", ""),
    "never": ("N EH1 V ER0", ""),
    "ever": ("EH1 V ER0", ""),
    "always": ("AO1 L W EY2 Z", ""),
    "often": ("AO1 F AH0 N", ""),
    "once": ("W AH1 N S", ""),
    "upon": ("AH0 P AA1 N", ""),
    "until": ("AH0 N T IH1 L", ""),
    "while": ("W AY1 L", ""),
    "through": ("TH R UW1", ""),
    "after": ("AE1 F T ER0", ""),
    "before": ("B IH0 F AO1 R", ""),
    "between": ("B IH0 T W IY1 N", ""),
    "because": ("B IH0 K AO1 Z", ""),
    "if": ("IH1 F", ""),
    "then": ("DH EH1 N", ""),
    "than": ("DH AE1 N", ""),
    "now": ("N AW1", ""),
    "when": ("W EH1 N", ""),
    "so": ("S OW1", ""),
    "as": ("AE1 Z", ""),
    "but": ("B AH1 T", ""),
    "by": ("B AY1", ""),
    "or": ("AO1 R", ""),
    "too": ("T UW1", ""),
    "all": ("AO1 L", ""),
    "both": ("B OW1 TH", ""),
    "each": ("IY1 CH", ""),
    "every": ("EH1 V ER0 IY0", ""),
    "some": ("S AH1 M", ""),
    "any": ("EH1 N IY0", ""),
    "this": ("DH IH1 S", ""),
    "that": ("DH AE1 T", ""),
    "these": ("DH IY1 Z", ""),
    "those": ("DH OW1 Z", ""),
    "thou": ("DH AW1", ""),
    "thee": ("DH IY1", ""),
    "thy": ("DH AY1", ""),
    "thine": ("DH AY1 N", ""),
    "hath": ("HH AE1 TH", ""),
    "o": ("OW1", ""),
    # sonnet and poetry vocabulary
    "compare": ("K AH0 M P EH1 R", "sdg"),
    "summer": ("S AH1 M ER0", "s"),
    "summer's": ("S AH1 M ER0 Z", ""),
    "winter": ("W IH1 N T ER0", "s"),
    "spring": ("S P R IH1 NG", "s"),
    "autumn": ("AO1 T AH0 M", "s"),
    "season": ("S IY1 Z AH0 N", "s"),
    "day": ("D EY1", "s"),
    "night": ("N AY1 T", "s"),
    "morning": ("M AO1 R N IH0 NG", "s"),
    "evening": ("IY1 V N IH0 NG", "s"),
    "midnight": ("M IH1 D N AY2 T", ""),
    "noon": ("N UW1 N", ""),
    "today": ("T AH0 D EY1", ""),
    "tomorrow": ("T AH0 M AA1 R OW2", ""),
    "yesterday": ("Y EH1 S T ER0 D EY2", ""),
    "art": ("AA1 R T", "s"),
    "lovely": ("L AH1 V L IY0", ""),
    "temperate": ("T EH1 M P ER0 AH0 T", ""),
    "rough": ("R AH1 F", ""),
    "shake": ("SH EY1 K", "sg"),
    "darling": ("D AA1 R L IH0 NG", "s"),
    "bud": ("B AH1 D", "s"),
    "lease": ("L IY1 S", "s"),
    "short": ("SH AO1 R T", ""),
    "date": ("D EY1 T", "sdg"),
    "sometime": ("S AH1 M T AY2 M", "s"),
    "hot": ("HH AA1 T", ""),
    "eye": ("AY1", "s"),
    "heaven": ("HH EH1 V AH0 N", "s"),
    "shine": ("SH AY1 N", "sdg"),
    "gold": ("G OW1 L D", ""),
    "golden": ("G OW1 L D AH0 N", ""),
    "complexion": ("K AH0 M P L EH1 K SH AH0 N", "s"),
    "fair": ("F EH1 R", "s"),
    "decline": ("D IH0 K L AY1 N", "sdg"),
    "chance": ("CH AE1 N S", "s"),
    "nature": ("N EY1 CH ER0", "s"),
    "nature's": ("N EY1 CH ER0 Z", ""),
    "change": ("CH EY1 N JH", "sdg"),
    "course": ("K AO1 R S", "s"),
    "eternal": ("IH0 T ER1 N AH0 L", ""),
    "fade": ("F EY1 D", "sdg"),
    "lose": ("L UW1 Z", "sg"),
    "lost": ("L AO1 S T", ""),
    "possession": ("P AH0 Z EH1 SH AH0 N", "s"),
    "death": ("D EH1 TH", "s"),
    "brag": ("B R AE1 G", "s"),
    "shade": ("SH EY1 D", "s"),
    "wander": ("W AA1 N D ER0", "sdg"),
    "line": ("L AY1 N", "s"),
    "time": ("T AY1 M", "s"),
    "grow": ("G R OW1", "sg"),
    "grew": ("G R UW1", ""),
    "grown": ("G R OW1 N", ""),
    "long": ("L AO1 NG", ""),
    "man": ("M AE1 N", ""),
    "men": ("M EH1 N", ""),
    "woman": ("W UH1 M AH0 N", ""),
    "women": ("W IH1 M AH0 N", ""),
    "breathe": ("B R IY1 DH", "sg"),
    "breath": ("B R EH1 TH", "s"),
    "see": ("S IY1", "sg"),
    "saw": ("S AO1", ""),
    "seen": ("S IY1 N", ""),
    "life": ("L AY1 F", ""),
    "live": ("L IH1 V", "sdg"),
    "give": ("G IH1 V", "sg"),
    "given": ("G IH1 V AH0 N", ""),
    "gave": ("G EY1 V", ""),
    "poem": ("P OW1 AH0 M", "s"),
    "poet": ("P OW1 AH0 T", "s"),
    "poetry": ("P OW1 AH0 T R IY0", ""),
    "verse": ("V ER1 S", "s"),
    "rhyme": ("R AY1 M", "sdg"),
    "rhythm": ("R IH1 DH AH0 M", "s"),
    "stanza": ("S T AE1 N Z AH0", "s"),
    "sonnet": ("S AA1 N AH0 T", "s"),
    "song": ("S AO1 NG", "s"),
    "music": ("M Y UW1 Z IH0 K", ""),
    "word": ("W ER1 D", "s"),
    "letter": ("L EH1 T ER0", "s"),
    "page": ("P EY1 JH", "s"),
    "book": ("B UH1 K", "s"),
    "story": ("S T AO1 R IY0", ""),
    "tale": ("T EY1 L", "s"),
    # nature
    "love": ("L AH1 V", "sdg"),
    "heart": ("HH AA1 R T", "s"),
    "soul": ("S OW1 L", "s"),
    "mind": ("M AY1 N D", "s"),
    "dream": ("D R IY1 M", "sdg"),
    "sleep": ("S L IY1 P", "sg"),
    "star": ("S T AA1 R", "s"),
    "sun": ("S AH1 N", "s"),
    "moon": ("M UW1 N", "s"),
    "sky": ("S K AY1", ""),
    "cloud": ("K L AW1 D", "s"),
    "rain": ("R EY1 N", "sdg"),
    "snow": ("S N OW1", "sdg"),
    "storm": ("S T AO1 R M", "s"),
    "thunder": ("TH AH1 N D ER0", "s"),
    "lightning": ("L AY1 T N IH0 NG", ""),
    "mist": ("M IH1 S T", "s"),
    "fog": ("F AA1 G", ""),
    "river": ("R IH1 V ER0", "s"),
    "stream": ("S T R IY1 M", "s"),
    "ocean": ("OW1 SH AH0 N", "s"),
    "sea": ("S IY1", "s"),
    "wave": ("W EY1 V", "s"),
    "shore": ("SH AO1 R", "s"),
    "tide": ("T AY1 D", "s"),
    "field": ("F IY1 L D", "s"),
    "meadow": ("M EH1 D OW2", "s"),
    "forest": ("F AO1 R AH0 S T", "s"),
    "wood": ("W UH1 D", "s"),
    "garden": ("G AA1 R D AH0 N", "s"),
    "flower": ("F L AW1 ER0", "s"),
    "rose": ("R OW1 Z", "s"),
    "lily": ("L IH1 L IY0", ""),
    "branch": ("B R AE1 N CH", "s"),
    "root": ("R UW1 T", "s"),
    "seed": ("S IY1 D", "s"),
    "grass": ("G R AE1 S", ""),
    "tree": ("T R IY1", "s"),
    "bird": ("B ER1 D", "s"),
    "wing": ("W IH1 NG", "s"),
    "feather": ("F EH1 DH ER0", "s"),
    "nest": ("N EH1 S T", "s"),
    "voice": ("V OY1 S", "s"),
    "wind": ("W IH1 N D", "s"),
    "breeze": ("B R IY1 Z", "s"),
    "mountain": ("M AW1 N T AH0 N", "s"),
    "valley": ("V AE1 L IY0", "s"),
    "hill": ("HH IH1 L", "s"),
    "path": ("P AE1 TH", "s"),
    "road": ("R OW1 D", "s"),
    "home": ("HH OW1 M", "s"),
    "house": ("HH AW1 S", ""),
    "door": ("D AO1 R", "s"),
    "window": ("W IH1 N D OW2", "s"),
    "wall": ("W AO1 L", "s"),
    "floor": ("F L AO1 R", "s"),
    "roof": ("R UW1 F", "s"),
    "candle": ("K AE1 N D AH0 L", "s"),
    "flame": ("F L EY1 M", "s"),
    "fire": ("F AY1 ER0", "s"),
    "ash": ("AE1 SH", "s"),
    "smoke": ("S M OW1 K", ""),
    "shadow": ("SH AE1 D OW2", "s"),
    "ghost": ("G OW1 S T", "s"),
    "spirit": ("S P IH1 R AH0 T", "s"),
    "angel": ("EY1 N JH AH0 L", "s"),
    "god": ("G AA1 D", "s"),
    "king": ("K IH1 NG", "s"),
    "queen": ("K W IY1 N", "s"),
    "child": ("CH AY1 L D", ""),
    "children": ("CH IH1 L D R AH0 N", ""),
    "mother": ("M AH1 DH ER0", "s"),
    "father": ("F AA1 DH ER0", "s"),
    "brother": ("B R AH1 DH ER0", "s"),
    "sister": ("S IH1 S T ER0", "s"),
    "friend": ("F R EH1 N D", "s"),
    "lover": ("L AH1 V ER0", "s"),
    "stranger": ("S T R EY1 N JH ER0", "s"),
    "world": ("W ER1 L D", "s"),
    "earth": ("ER1 TH", ""),
    "land": ("L AE1 N D", "s"),
    "country": ("K AH1 N T R IY0", ""),
    "town": ("T AW1 N", "s"),
    "city": ("S IH1 T IY0", ""),
    "street": ("S T R IY1 T", "s"),
    "stone": ("S T OW1 N", "s"),
    "rock": ("R AA1 K", "s"),
    "sand": ("S AE1 N D", ""),
    "dust": ("D AH1 S T", ""),
    "silver": ("S IH1 L V ER0", ""),
    "iron": ("AY1 ER0 N", ""),
    "glass": ("G L AE1 S", ""),
    "mirror": ("M IH1 R ER0", "s"),
    "water": ("W AO1 T ER0", "s"),
    "blood": ("B L AH1 D", ""),
    "bone": ("B OW1 N", "s"),
    "skin": ("S K IH1 N", ""),
    "hand": ("HH AE1 N D", "s"),
    "finger": ("F IH1 NG G ER0", "s"),
    "arm": ("AA1 R M", "s"),
    "face": ("F EY1 S", "s"),
    "cheek": ("CH IY1 K", "s"),
    "lip": ("L IH1 P", "s"),
    "mouth": ("M AW1 TH", "s"),
    "tongue": ("T AH1 NG", "s"),
    "ear": ("IY1 R", "s"),
    "hair": ("HH EH1 R", ""),
    "head": ("HH EH1 D", "s"),
    "neck": ("N EH1 K", "s"),
    "shoulder": ("SH OW1 L D ER0", "s"),
    "chest": ("CH EH1 S T", "s"),
    "grave": ("G R EY1 V", "s"),
    "tomb": ("T UW1 M", "s"),
    # verbs
    "walk": ("W AO1 K", "sdg"),
    "talk": ("T AO1 K", "sdg"),
    "look": ("L UH1 K", "sdg"),
    "watch": ("W AA1 CH", "sdg"),
    "listen": ("L IH1 S AH0 N", "sdg"),
    "hear": ("HH IY1 R", "sg"),
    "heard": ("HH ER1 D", ""),
    "call": ("K AO1 L", "sdg"),
    "fall": ("F AO1 L", "sg"),
    "fell": ("F EH1 L", ""),
    "fallen": ("F AA1 L AH0 N", ""),
    "rise": ("R AY1 Z", "sg"),
    "turn": ("T ER1 N", "sdg"),
    "burn": ("B ER1 N", "sdg"),
    "learn": ("L ER1 N", "sdg"),
    "yearn": ("Y ER1 N", "sdg"),
    "return": ("R IH0 T ER1 N", "sdg"),
    "remember": ("R IH0 M EH1 M B ER0", "sdg"),
    "forget": ("F ER0 G EH1 T", "s"),
    "forgot": ("F ER0 G AA1 T", ""),
    "whisper": ("W IH1 S P ER0", "sdg"),
    "scream": ("S K R IY1 M", "sdg"),
    "laugh": ("L AE1 F", "sdg"),
    "weep": ("W IY1 P", "sg"),
    "wept": ("W EH1 P T", ""),
    "smile": ("S M AY1 L", "sdg"),
    "sing": ("S IH1 NG", "sg"),
    "sang": ("S AE1 NG", ""),
    "sung": ("S AH1 NG", ""),
    "dance": ("D AE1 N S", "sdg"),
    "bring": ("B R IH1 NG", "sg"),
    "brought": ("B R AO1 T", ""),
    "hold": ("HH OW1 L D", "sg"),
    "held": ("HH EH1 L D", ""),
    "keep": ("K IY1 P", "sg"),
    "kept": ("K EH1 P T", ""),
    "take": ("T EY1 K", "sg"),
    "took": ("T UH1 K", ""),
    "taken": ("T EY1 K AH0 N", ""),
    "make": ("M EY1 K", "sg"),
    "made": ("M EY1 D", ""),
    "break": ("B R EY1 K", "sg"),
    "broke": ("B R OW1 K", ""),
    "broken": ("B R OW1 K AH0 N", ""),
    "build": ("B IH1 L D", "sg"),
    "built": ("B IH1 L T", ""),
    "create": ("K R IY0 EY1 T", "sdg"),
    "destroy": ("D IH0 S T R OY1", "sdg"),
    "begin": ("B IH0 G IH1 N", "s"),
    "began": ("B IH0 G AE1 N", ""),
    "begun": ("B IH0 G AH1 N", ""),
    "end": ("EH1 N D", "sdg"),
    "open": ("OW1 P AH0 N", "sdg"),
    "close": ("K L OW1 Z", "sdg"),
    "find": ("F AY1 N D", "sg"),
    "found": ("F AW1 N D", ""),
    "seek": ("S IY1 K", "sg"),
    "sought": ("S AO1 T", ""),
    "search": ("S ER1 CH", "sdg"),
    "travel": ("T R AE1 V AH0 L", "sdg"),
    "arrive": ("ER0 AY1 V", "sdg"),
    "leave": ("L IY1 V", "sg"),
    "left": ("L EH1 F T", ""),
    "stay": ("S T EY1", "sdg"),
    "pray": ("P R EY1", "sdg"),
    "hope": ("HH OW1 P", "sdg"),
    "fear": ("F IH1 R", "sdg"),
    "trust": ("T R AH1 S T", "sdg"),
    "believe": ("B IH0 L IY1 V", "sdg"),
    "know": ("N OW1", "sg"),
    "knew": ("N UW1", ""),
    "known": ("N OW1 N", ""),
    "think": ("TH IH1 NG K", "sg"),
    "thought": ("TH AO1 T", "s"),
    "feel": ("F IY1 L", "sg"),
    "felt": ("F EH1 L T", ""),
    "want": ("W AA1 N T", "sdg"),
    "need": ("N IY1 D", "sdg"),
    "wish": ("W IH1 SH", "sdg"),
    "desire": ("D IH0 Z AY1 ER0", "sdg"),
    "die": ("D AY1", "sd"),
    "bloom": ("B L UW1 M", "sdg"),
    "wither": ("W IH1 DH ER0", "sdg"),
    "glow": ("G L OW1", "sdg"),
    "gleam": ("G L IY1 M", "sdg"),
    "sparkle": ("S P AA1 R K AH0 L", "sdg"),
    "drift": ("D R IH1 F T", "sdg"),
    "float": ("F L OW1 T", "sdg"),
    "soar": ("S AO1 R", "sdg"),
    "climb": ("K L AY1 M", "sdg"),
    "descend": ("D IH0 S EH1 N D", "sdg"),
    "wait": ("W EY1 T", "sdg"),
    "stand": ("S T AE1 N D", "sg"),
    "stood": ("S T UH1 D", ""),
    "rest": ("R EH1 S T", "sdg"),
    "wake": ("W EY1 K", "sg"),
    "woke": ("W OW1 K", ""),
    "remain": ("R IH0 M EY1 N", "sdg"),
    "become": ("B IH0 K AH1 M", "sg"),
    "became": ("B IH0 K EY1 M", ""),
    "say": ("S EY1", "sg"),
    "said": ("S EH1 D", ""),
    "tell": ("T EH1 L", "sg"),
    "told": ("T OW1 L D", ""),
    "speak": ("S P IY1 K", "sg"),
    "spoke": ("S P OW1 K", ""),
    "spoken": ("S P OW1 K AH0 N", ""),
    "read": ("R IY1 D", "sg"),
    "write": ("R AY1 T", "sg"),
    "wrote": ("R OW1 T", ""),
    "written": ("R IH1 T AH0 N", ""),
    "come": ("K AH1 M", "sg"),
    "came": ("K EY1 M", ""),
    "go": ("G OW1", ""),
    "goes": ("G OW1 Z", ""),
    "going": ("G OW1 IH0 NG", ""),
    "gone": ("G AO1 N", ""),
    "went": ("W EH1 N T", ""),
    "run": ("R AH1 N", "s"),
    "ran": ("R AE1 N", ""),
    "running": ("R AH1 N IH0 NG", ""),
    "move": ("M UW1 V", "sdg"),
    "pass": ("P AE1 S", "sdg"),
    "reach": ("R IY1 CH", "sdg"),
    "touch": ("T AH1 CH", "sdg"),
    "follow": ("F AA1 L OW0", "sdg"),
    "lead": ("L IY1 D", "sg"),
    "led": ("L EH1 D", ""),
    "show": ("SH OW1", "sdg"),
    "shown": ("SH OW1 N", ""),
    "play": ("P L EY1", "sdg"),
    "work": ("W ER1 K", "sdg"),
    "rains": ("R EY1 N Z", ""),
    # adjectives and misc
    "good": ("G UH1 D", ""),
    "bad": ("B AE1 D", ""),
    "new": ("N UW1", ""),
    "old": ("OW1 L D", ""),
    "young": ("Y AH1 NG", ""),
    "beautiful": ("B Y UW1 T AH0 F AH0 L", ""),
    "beauty": ("B Y UW1 T IY0", ""),
    "sweet": ("S W IY1 T", ""),
    "bitter": ("B IH1 T ER0", ""),
    "soft": ("S AA1 F T", ""),
    "hard": ("HH AA1 R D", ""),
    "warm": ("W AO1 R M", ""),
    "cold": ("K OW1 L D", ""),
    "cool": ("K UW1 L", ""),
    "bright": ("B R AY1 T", ""),
    "dark": ("D AA1 R K", ""),
    "darkened": ("D AA1 R K AH0 N D", ""),
    "darkness": ("D AA1 R K N AH0 S", ""),
    "light": ("L AY1 T", "s"),
    "deep": ("D IY1 P", ""),
    "shallow": ("SH AE1 L OW0", ""),
    "high": ("HH AY1", ""),
    "low": ("L OW1", ""),
    "far": ("F AA1 R", ""),
    "near": ("N IH1 R", ""),
    "wide": ("W AY1 D", ""),
    "narrow": ("N EH1 R OW0", ""),
    "empty": ("EH1 M P T IY0", ""),
    "full": ("F UH1 L", ""),
    "quiet": ("K W AY1 AH0 T", ""),
    "loud": ("L AW1 D", ""),
    "silent": ("S AY1 L AH0 N T", ""),
    "silence": ("S AY1 L AH0 N S", ""),
    "gentle": ("JH EH1 N T AH0 L", ""),
    "fierce": ("F IH1 R S", ""),
    "wild": ("W AY1 L D", ""),
    "true": ("T R UW1", ""),
    "false": ("F AO1 L S", ""),
    "real": ("R IY1 L", ""),
    "strange": ("S T R EY1 N JH", ""),
    "familiar": ("F AH0 M IH1 L Y ER0", ""),
    "sacred": ("S EY1 K R AH0 D", ""),
    "holy": ("HH OW1 L IY0", ""),
    "whole": ("HH OW1 L", ""),
    "pure": ("P Y UH1 R", ""),
    "simple": ("S IH1 M P AH0 L", ""),
    "rich": ("R IH1 CH", ""),
    "poor": ("P UH1 R", ""),
    "happy": ("HH AE1 P IY0", ""),
    "sad": ("S AE1 D", ""),
    "lonely": ("L OW1 N L IY0", ""),
    "weary": ("W IH1 R IY0", ""),
    "tired": ("T AY1 ER0 D", ""),
    "peaceful": ("P IY1 S F AH0 L", ""),
    "peace": ("P IY1 S", ""),
    "ancient": ("EY1 N CH AH0 N T", ""),
    "endless": ("EH1 N D L AH0 S", ""),
    "infinite": ("IH1 N F AH0 N AH0 T", ""),
    "mortal": ("M AO1 R T AH0 L", ""),
    "immortal": ("IH0 M AO1 R T AH0 L", ""),
    "crimson": ("K R IH1 M Z AH0 N", ""),
    "scarlet": ("S K AA1 R L AH0 T", ""),
    "azure": ("AE1 ZH ER0", ""),
    "emerald": ("EH1 M R AH0 L D", ""),
    "pale": ("P EY1 L", ""),
    "red": ("R EH1 D", ""),
    "blue": ("B L UW1", ""),
    "green": ("G R IY1 N", ""),
    "white": ("W AY1 T", ""),
    "black": ("B L AE1 K", ""),
    "grey": ("G R EY1", ""),
    "gray": ("G R EY1", ""),
    "brown": ("B R AW1 N", ""),
    "yellow": ("Y EH1 L OW0", ""),
    "purple": ("P ER1 P AH0 L", ""),
    "pink": ("P IH1 NG K", ""),
    "orange": ("AO1 R AH0 N JH", ""),
    # numbers and time
    "one": ("W AH1 N", "s"),
    "two": ("T UW1", ""),
    "three": ("TH R IY1", ""),
    "four": ("F AO1 R", ""),
    "five": ("F AY1 V", ""),
    "six": ("S IH1 K S", ""),
    "seven": ("S EH1 V AH0 N", ""),
    "eight": ("EY1 T", ""),
    "nine": ("N AY1 N", ""),
    "ten": ("T EH1 N", ""),
    "hundred": ("HH AH1 N D R AH0 D", "s"),
    "thousand": ("TH AW1 Z AH0 N D", "s"),
    "first": ("F ER1 S T", ""),
    "second": ("S EH1 K AH0 N D", "s"),
    "last": ("L AE1 S T", ""),
    "year": ("Y IH1 R", "s"),
    "month": ("M AH1 N TH", "s"),
    "week": ("W IY1 K", "s"),
    "hour": ("AW1 ER0", "s"),
    "minute": ("M IH1 N AH0 T", "s"),
    "moment": ("M OW1 M AH0 N T", "s"),
    "age": ("EY1 JH", "s"),
    "century": ("S EH1 N CH ER0 IY0", ""),
    # technology and modern topics
    "computer": ("K AH0 M P Y UW1 T ER0", "s"),
    "machine": ("M AH0 SH IY1 N", "s"),
    "engine": ("EH1 N JH AH0 N", "s"),
    "artificial": ("AA2 R T AH0 F IH1 SH AH0 L", ""),
    "football": ("F UH1 T B AO2 L", ""),
    "virus": ("V AY1 R AH0 S", ""),
    "pandemic": ("P AE0 N D EH1 M IH0 K", "s"),
    "facemask": ("F EY1 S M AE2 S K", "s"),
    "mask": ("M AE1 S K", "s"),
    "screen": ("S K R IY1 N", "s"),
    "wire": ("W AY1 ER0", "s"),
    "signal": ("S IH1 G N AH0 L", "s"),
    "number": ("N AH1 M B ER0", "s"),
    "pattern": ("P AE1 T ER0 N", "s"),
    "system": ("S IH1 S T AH0 M", "s"),
    "moonlight": ("M UW1 N L AY2 T", ""),
    "sunlight": ("S AH1 N L AY2 T", ""),
    "starlight": ("S T AA1 R L AY2 T", ""),
    "daylight": ("D EY1 L AY2 T", ""),
    "twilight": ("T W AY1 L AY2 T", ""),
    "dawn": ("D AO1 N", "s"),
    "dusk": ("D AH1 S K", ""),
    "horizon": ("HH ER0 AY1 Z AH0 N", "s"),
    "echo": ("EH1 K OW0", ""),
    "memory": ("M EH1 M ER0 IY0", ""),
    "sorrow": ("S AA1 R OW0", "s"),
    "joy": ("JH OY1", "s"),
    "grief": ("G R IY1 F", ""),
    "tear": ("T IH1 R", "s"),
    "grace": ("G R EY1 S", ""),
    "glory": ("G L AO1 R IY0", ""),
    "pride": ("P R AY1 D", ""),
    "shame": ("SH EY1 M", ""),
    "honor": ("AA1 N ER0", "s"),
    "truth": ("T R UW1 TH", "s"),
    "lie": ("L AY1 ", "sd"),
    "faith": ("F EY1 TH", ""),
    "doubt": ("D AW1 T", "sdg"),
    "secret": ("S IY1 K R AH0 T", "s"),
    "promise": ("P R AA1 M AH0 S", "sdg"),
    "prayer": ("P R EH1 R", "s"),
    "blessing": ("B L EH1 S IH0 NG", "s"),
    "curse": ("K ER1 S", "sdg"),
    "magic": ("M AE1 JH IH0 K", ""),
    "wonder": ("W AH1 N D ER0", "sdg"),
    "mystery": ("M IH1 S T ER0 IY0", ""),
    "journey": ("JH ER1 N IY0", "s"),
    "distance": ("D IH1 S T AH0 N S", "s"),
    "winged": ("W IH1 NG D", ""),
}

# Extra pronunciations appended after the primary, as WORD(1), WORD(2)...
ALTERNATES: dict[str, list[str]] = {
    "a": ["EY1"],
    "the": ["DH IY0"],
    "wind": ["W AY1 N D"],
    "lives": ["L AY1 V Z"],
    "read": ["R EH1 D"],
    "tear": ["T EH1 R"],
}


def plural(word: str, pron: str) -> tuple[str, str] | None:
    if word.endswith("y") and word[-2:-1] not in "aeiou":
        return None
    last = pron.split()[-1]
    if last in SIBILANTS:
        suffix, phones = "es" if word[-1] in "szx" or word.endswith(("ch", "sh")) else "s", "IH0 Z"
    elif last in VOICELESS:
        suffix, phones = "s", "S"
    else:
        suffix, phones = "s", "Z"
    return word + suffix, f"{pron} {phones}"


def past(word: str, pron: str) -> tuple[str, str] | None:
    if word.endswith("y") and word[-2:-1] not in "aeiou":
        return None
    last = pron.split()[-1]
    if last in {"T", "D"}:
        phones = "IH0 D"
    elif last in VOICELESS:
        phones = "T"
    else:
        phones = "D"
    suffix = "d" if word.endswith("e") else "ed"
    return word + suffix, f"{pron} {phones}"


def gerund(word: str, pron: str) -> tuple[str, str] | None:
    if word.endswith("e") and not word.endswith("ee"):
        spelled = word[:-1] + "ing"
    else:
        spelled = word + "ing"
    return spelled, f"{pron} IH0 NG"


def build() -> list[str]:
    entries: dict[str, list[str]] = {}

    def put(word: str, pron: str) -> None:
        entries.setdefault(word.upper(), []).append(" ".join(pron.split()))

    for word, (pron, tags) in BASE.items():
        put(word, pron)
        for tag, rule in (("s", plural), ("d", past), ("g", gerund)):
            if tag in tags:
                derived = rule(word, pron)
                if derived:
                    put(*derived)
    for word, prons in ALTERNATES.items():
        for pron in prons:
            entries.setdefault(word.upper(), []).append(pron)

    lines = [
        ";;; English pronunciation lexicon fixture (CMU dictionary format).",
        ";;; Generated by tools/build_lexicon.py; do not edit by hand.",
    ]
    for word in sorted(entries):
        for i, pron in enumerate(entries[word]):
            key = word if i == 0 else f"{word}({i})"
            lines.append(f"{key}  {pron}")
    return lines


def main() -> None:
    lines = build()
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    words = sum(1 for line in lines if line and not line.startswith(";;;") and "(" not in line.split()[0])
    print(f"wrote {OUT}: {words} words, {len(lines) - 2} pronunciation lines")


if __name__ == "__main__":
    main()
