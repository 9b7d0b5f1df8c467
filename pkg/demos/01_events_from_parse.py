#!/usr/bin/env python3
# Walk through event extraction on one dependency-parsed sentence.

from priorcase import read_conllu, extract_events, collect_arguments, canonical_key

# "These statements were forwarded to the Police" as a CoNLL-U block:
# the participle is the root, the subject hangs off it as nsubjpass, and
# the object sits one level below the preposition.
SENTENCE = """\
1\tThese\tthese\tDET\t_\t_\t2\tdet\t_\t_
2\tstatements\tstatement\tNOUN\t_\t_\t4\tnsubjpass\t_\t_
3\twere\tbe\tAUX\t_\t_\t4\tauxpass\t_\t_
4\tforwarded\tforward\tVERB\t_\t_\t0\troot\t_\t_
5\tto\tto\tADP\t_\t_\t4\tprep\t_\t_
6\tthe\tthe\tDET\t_\t_\t7\tdet\t_\t_
7\tPolice\tpolice\tPROPN\t_\t_\t5\tpobj\t_\t_
"""

doc = read_conllu(SENTENCE, "demo")
sentence = doc.sentences[0]

print("tokens:")
for t in sentence.tokens:
    print(f"  {t.index}. {t.form:<12} {t.upos:<6} head={t.head} {t.deprel}")

# the verb's left side supplies subjects, the right side objects
print("\nsubject phrases:", collect_arguments(sentence, 4, "left"))
print("object phrases: ", collect_arguments(sentence, 4, "right"))

for event in extract_events(doc).events:
    print("\nextracted event:")
    print("  predicate:", event.predicate)
    print("  subject:  ", event.subject)
    print("  pobj:     ", event.pobj)
    print("  key:      ", canonical_key(event))
