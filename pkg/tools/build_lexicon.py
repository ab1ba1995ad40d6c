"""Regenerate the shipped verb lexicon and irregular-form table.

Usage: python tools/build_lexicon.py

Writes src/procmatch/nlp/data/verbs.tsv and irregular.tsv. Both files are
checked in; rerun this only after editing the word lists below.
"""

from __future__ import annotations

from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "procmatch" / "nlp" / "data"

BUSINESS_VERBS = """
accept access accommodate account accrue achieve acknowledge acquire act activate
adapt add address adjust administer admit adopt advance advertise advise
affirm aggregate agree alert allocate allow alter amend analyse analyze
announce annotate answer anticipate appeal append apply appoint appraise approach
appropriate approve archive arrange arrive articulate ask assemble assert assess
assign assist associate assume assure attach attend attest audit augment
authenticate authorize authorise automate avoid award back balance ban bargain
batch bill block board book borrow bounce box brief broadcast
browse budget build bundle buy calculate calibrate call cancel capture
carry cash catalog catalogue categorize cause certify chair challenge change
charge chart chase check circulate claim clarify classify clean clear
clip close coach code collaborate collate collect combine comment commission
commit communicate compare compensate compete compile complain complete comply compose
compute conclude conduct configure confirm connect consider consign consolidate construct
consult consume contact contain continue contract contribute control convert convey
coordinate copy correct correspond cost count cover craft create credit
cross customize cut deal debit debug decide declare decline decommission
decrease dedicate deduct default defer define delay delegate delete deliver
demand demonstrate deny deploy deposit derive describe design designate destroy
detail detect determine develop devise diagnose dictate digitize direct disburse
discard discharge disclose discontinue discount discover discuss dismiss dispatch display
dispose distribute divide document download draft drain draw drive drop
earn edit educate eliminate email embed emit employ empty enable
encode encourage end endorse enforce engage engineer enhance enlist enquire
enroll ensure enter equip escalate establish estimate evaluate examine exceed
exchange execute exercise exit expand expedite expense experience expire explain
export expose express extend extract fabricate facilitate fail fax feed
fetch file fill finalize finance find finish fix flag focus
follow forecast formalize format forward found freeze fulfil fulfill fund
gather generate get give grade grant greet guarantee guide halt
handle head help hire hold identify implement import improve include
incorporate increase incur indicate inform initiate input inquire insert inspect
install instruct insure integrate interview introduce inventory invest investigate invite
invoice involve issue itemize join judge justify keep key label
launch lead lease leave lend license link list load loan
locate lock log maintain make manage manufacture map mark market
match measure meet merge migrate minimize mitigate modify monitor motivate
move negotiate nominate note notify number obtain offer onboard open
operate optimize order organize originate outline outsource overhaul oversee own
pack package pay perform permit pick pilot place plan post
postpone predict prefer prepare present preserve prevent price print prioritize
process procure produce program project promote prompt propose protect provide
publish pull purchase pursue push qualify quantify query question queue
quote raise rank rate reach read realize reallocate reassign rebate
recalculate receive recommend reconcile record recover recruit rectify recycle redeem
redirect reduce refer refine refund register reimburse reject relabel release
relocate remind remove renew rent reorder repair repay replace replenish
reply report represent request require reschedule research reserve reset resolve
respond restart restock restore restrict resubmit retain retire retrieve return
reverse review revise reward route run sample save scan schedule
score screen search secure segment select sell send separate sequence
serve service settle share ship shop shortlist sign simulate sort
source specify split sponsor staff stage standardize start state stock
stop store streamline submit subscribe substitute suggest summarize supervise supply
support suspend sync synchronize tag take target test terminate track
trade train transact transcribe transfer transform translate transmit transport travel
trigger troubleshoot unload unlock update upgrade upload use utilize validate
value verify view visit void wait waive warehouse weigh welcome
withdraw withhold work wrap write accompany adjudicate amortize apportion benchmark
capitalize compress deactivate decrypt depreciate disable encrypt escrow evict
underwrite vet vend verbalize weight zip
"""

# base -> (past, past participle)
IRREGULAR = {
    "bring": ("brought", "brought"),
    "build": ("built", "built"),
    "buy": ("bought", "bought"),
    "broadcast": ("broadcast", "broadcast"),
    "choose": ("chose", "chosen"),
    "cost": ("cost", "cost"),
    "cut": ("cut", "cut"),
    "deal": ("dealt", "dealt"),
    "draw": ("drew", "drawn"),
    "drive": ("drove", "driven"),
    "feed": ("fed", "fed"),
    "find": ("found", "found"),
    "forecast": ("forecast", "forecast"),
    "freeze": ("froze", "frozen"),
    "get": ("got", "gotten"),
    "give": ("gave", "given"),
    "hold": ("held", "held"),
    "keep": ("kept", "kept"),
    "lead": ("led", "led"),
    "leave": ("left", "left"),
    "lend": ("lent", "lent"),
    "make": ("made", "made"),
    "meet": ("met", "met"),
    "oversee": ("oversaw", "overseen"),
    "pay": ("paid", "paid"),
    "read": ("read", "read"),
    "repay": ("repaid", "repaid"),
    "reset": ("reset", "reset"),
    "run": ("ran", "run"),
    "sell": ("sold", "sold"),
    "send": ("sent", "sent"),
    "split": ("split", "split"),
    "take": ("took", "taken"),
    "underwrite": ("underwrote", "underwritten"),
    "withdraw": ("withdrew", "withdrawn"),
    "withhold": ("withheld", "withheld"),
    "write": ("wrote", "written"),
}

# Closed-class auxiliaries, tagged AUX before the verb lexicon is consulted.
AUXILIARY_LEMMAS = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be", "be": "be",
    "has": "have", "had": "have", "have": "have",
    "does": "do", "did": "do", "do": "do",
}

# Final consonant doubles before -ed/-ing.
DOUBLING = {
    "ban", "chat", "clip", "commit", "control", "drop", "emit", "equip", "flag",
    "incur", "log", "map", "admit", "permit", "plan", "prefer", "refer", "ship",
    "shop", "stop", "submit", "resubmit", "tag", "transfer", "transmit", "wrap",
    "zip", "defer", "scan", "occur", "program",
}

VOWELS = set("aeiou")


def third_person(verb: str) -> str:
    if verb.endswith(("s", "x", "z", "ch", "sh", "o")):
        return verb + "es"
    if verb.endswith("y") and verb[-2] not in VOWELS:
        return verb[:-1] + "ies"
    return verb + "s"


def past(verb: str) -> str:
    if verb in DOUBLING:
        return verb + verb[-1] + "ed"
    if verb.endswith("e"):
        return verb + "d"
    if verb.endswith("y") and verb[-2] not in VOWELS:
        return verb[:-1] + "ied"
    return verb + "ed"


def present_participle(verb: str) -> str:
    if verb in DOUBLING:
        return verb + verb[-1] + "ing"
    if verb.endswith("ie"):
        return verb[:-2] + "ying"
    if verb.endswith(("ee", "ye", "oe")):
        return verb + "ing"
    if verb.endswith("e"):
        return verb[:-1] + "ing"
    return verb + "ing"


def build() -> tuple[list[tuple[str, str]], list[tuple[str, str]]]:
    verbs = sorted(set(BUSINESS_VERBS.split()))
    overlap = set(verbs) & set(AUXILIARY_LEMMAS)
    if overlap:
        raise SystemExit(f"auxiliaries in verb list: {sorted(overlap)}")
    rows: dict[str, str] = {}
    for verb in verbs:
        forms = [verb, third_person(verb), present_participle(verb)]
        if verb in IRREGULAR:
            forms.extend(IRREGULAR[verb])
        else:
            forms.append(past(verb))
        for form in forms:
            # base forms always map to themselves; other clashes keep the
            # alphabetically first lemma
            if form in rows and rows[form] == form:
                continue
            if form in verbs:
                rows[form] = form
            else:
                rows.setdefault(form, verb)
    irregular = sorted(AUXILIARY_LEMMAS.items())
    for verb, (simple_past, participle) in sorted(IRREGULAR.items()):
        irregular.append((simple_past, verb))
        if participle != simple_past:
            irregular.append((participle, verb))
    return sorted(rows.items()), sorted(set(irregular))


def main() -> None:
    verbs, irregular = build()
    header = "# inflected_form<TAB>lemma; generated by tools/build_lexicon.py\n"
    (DATA / "verbs.tsv").write_text(
        header + "".join(f"{form}\t{lemma}\n" for form, lemma in verbs),
        encoding="utf-8",
    )
    (DATA / "irregular.tsv").write_text(
        header + "".join(f"{form}\t{lemma}\n" for form, lemma in irregular),
        encoding="utf-8",
    )
    lemmas = {lemma for _, lemma in verbs}
    print(f"{len(lemmas)} verbs, {len(verbs)} verb forms, {len(irregular)} irregular forms")


if __name__ == "__main__":
    main()
