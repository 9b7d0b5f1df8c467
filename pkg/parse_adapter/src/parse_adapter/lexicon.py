"""Word lists backing the rule-based tagger, lemmatizer, and parser.

The lists skew toward judgment prose; unknown words default to NOUN
(or PROPN when capitalized mid-sentence), which is the safe choice for
the downstream consumer since only VERB tokens spawn events.
"""

DETERMINERS = {
    "a", "an", "the", "this", "that", "these", "those", "any", "some",
    "no", "each", "every", "both", "all", "such", "its", "his", "her",
    "their", "our",
}

# "be" forms double as the passive signal
AUX_BE = {"am", "is", "are", "was", "were", "be", "been", "being"}
AUX_HAVE = {"have", "has", "had", "having"}
AUX_DO = {"do", "does", "did"}
AUX_MODAL = {
    "will", "would", "shall", "should", "can", "could", "may", "might", "must",
}
AUXILIARIES = AUX_BE | AUX_HAVE | AUX_DO | AUX_MODAL

ADPOSITIONS = {
    "of", "in", "on", "at", "by", "to", "for", "with", "from", "under",
    "over", "against", "before", "after", "between", "during", "upon",
    "into", "within", "without", "through", "towards", "toward", "per",
    "vide", "about", "above", "below", "behind", "near",
}

PRONOUNS = {
    "i", "you", "he", "she", "it", "we", "they", "him", "her", "them",
    "us", "me", "who", "whom", "which", "what", "himself", "herself",
    "itself", "themselves", "there",
}

COORDINATORS = {"and", "or", "but", "nor"}

SUBORDINATORS = {"because", "although", "though", "whether", "while", "if", "since", "as"}

PARTICLES = {"not", "also", "only", "even"}

ADJECTIVES = {
    "guilty", "liable", "valid", "void", "legal", "illegal", "criminal",
    "civil", "appellate", "judicial", "present", "previous", "aforesaid",
    "learned", "honourable", "supreme", "high", "lower", "strong",
    "necessary", "sufficient", "reasonable", "relevant", "material",
}

# Base verb forms; inflections are recognized by suffix rules against
# this list (and by the participle-after-auxiliary context rule).
VERB_LEMMAS = {
    "accept", "accuse", "acquit", "adduce", "adjourn", "admit", "affirm",
    "allege", "allow", "answer", "appeal", "appear", "apply", "argue",
    "arise", "arrest", "ask", "assert", "attack", "award", "base",
    "bring", "call", "cancel", "challenge", "charge", "cite", "claim",
    "come", "commit", "compare", "confirm", "consider", "contend",
    "convict", "decide", "declare", "decree", "deny", "depose", "determine",
    "direct", "disclose", "discuss", "dismiss", "dispose", "examine",
    "execute", "explain", "file", "find", "follow", "forward", "give",
    "go", "grant", "happen", "hear", "hold", "identify", "impose",
    "impugn", "indicate", "inform", "injure", "investigate", "invoke",
    "issue", "kill", "lead", "lodge", "maintain", "make", "mention",
    "move", "note", "notice", "observe", "obtain", "occur", "order",
    "pass", "pay", "perform", "permit", "place", "plead", "point",
    "prefer", "present", "proceed", "produce", "pronounce", "prosecute",
    "prove", "provide", "quash", "raise", "reach", "receive", "record",
    "refer", "refuse", "register", "reject", "rely", "remand", "remain",
    "remit", "report", "represent", "require", "reverse", "review",
    "rule", "run", "say", "see", "seek", "seize", "send", "sentence",
    "set", "show", "sign", "state", "submit", "suffer", "suggest",
    "support", "sustain", "take", "try", "uphold", "urge", "vacate",
    "warrant", "withdraw", "write",
}

# irregular surface form -> (lemma, upos hint)
IRREGULAR_VERBS = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be",
    "has": "have", "had": "have", "having": "have",
    "did": "do", "does": "do", "done": "do",
    "arose": "arise", "arisen": "arise",
    "brought": "bring", "came": "come", "found": "find", "gave": "give",
    "given": "give", "went": "go", "gone": "go", "heard": "hear",
    "held": "hold", "led": "lead", "made": "make", "paid": "pay",
    "ran": "run", "said": "say", "saw": "see", "seen": "see",
    "sent": "send", "set": "set", "shown": "show", "showed": "show",
    "sought": "seek", "took": "take", "taken": "take", "tried": "try",
    "upheld": "uphold", "withdrew": "withdraw", "withdrawn": "withdraw",
    "wrote": "write", "written": "write",
}

IRREGULAR_NOUNS = {
    "children": "child", "men": "man", "women": "woman", "people": "person",
    "proceedings": "proceeding", "premises": "premise",
}

PRONOUN_LEMMAS = {
    "him": "he", "his": "he", "her": "she", "them": "they", "me": "i",
    "us": "we", "whom": "who", "himself": "he", "herself": "she",
    "itself": "it", "themselves": "they",
}

# -ed words that are never main verbs
NON_VERB_ED = {"hundred", "indeed", "sacred", "aforesaid"}
