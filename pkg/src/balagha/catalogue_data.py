# -*- coding: utf-8 -*-
"""Embedded catalogue of the 84 Arabic-rhetoric literary devices.

One row per device: (code, name_en, name_ar, slug, definition, note).
Arabic names are stored as printed in the source catalogue, variant
spellings included; treat them as unverified transliterations.
`note` carries per-device scoring nuances where the catalogue states
one; the scoring engine itself treats every annotation uniformly.
"""

CATALOGUE_VERSION = "1.0"

# Marks are {0, 1, 2} for every device except CG-1 ({0, -1}), handled in
# taxonomy.py rather than repeated on every row here.

DEVICE_ROWS = [
    # Domain A: word order and sentence structure
    ("A-1", "Reporting vs Informing Sentences",
     "ظهر جملة خبرية في مكان مقتضى لجملة إنشائية وعكسه",
     "reporting-vs-informing-sentences",
     "A factual reporting sentence appears where an informing sentence "
     "(question, command, wish) is expected, or the reverse, for rhetorical "
     "effect.",
     None),
    ("A-2", "Affirmation", "التوكيد", "affirmation",
     "Affirmatory particles and constructions are used out of proportion to "
     "the addressee's doubt, or withheld where affirmation is expected.",
     "No mark for the use of an affirmatory device per se; award only when "
     "the norms of affirmation are deviated from for effect."),
    ("A-3", "The Imperative", "الأمر", "the-imperative",
     "A command form is used for something other than commanding, such as "
     "supplication, challenge, threat, permission or sarcasm.",
     "No mark when the imperative merely issues a command."),
    ("A-4", "Prohibition", "النهي", "prohibition",
     "The prohibitive is used for purposes other than prohibiting, such as "
     "supplication, guidance, rebuke or sarcasm.",
     "No mark when the prohibitive merely prohibits."),
    ("A-5", "The Interrogative", "الاستفهام", "the-interrogative",
     "A question form is used to command, rebuke, warn, deny, express pride "
     "or astonishment, or pose a question intended to produce an effect "
     "rather than an answer.",
     "No mark for a plain information-seeking question."),
    ("A-6", "Wish", "التمنى", "wish",
     "Particles of hoping and wishing are applied against their normal "
     "possible/impossible division to colour the outcome being wished for.",
     None),
    ("A-7", "The Vocative", "النداء", "the-vocative",
     "Vocative particles for near and distant addressees are swapped or "
     "repurposed to signal emotional distance, regret, lamentation or "
     "rebuke.",
     "No mark for vocative particles in their expected usage."),
    ("A-8", "Definiteness and Indefiniteness", "التعريف والتنكير",
     "definiteness-and-indefiniteness",
     "Definite or indefinite marking is chosen against expectation to "
     "magnify, belittle or single out the referent.",
     None),
    ("A-9", "Length of Speech: Brevity, Verbosity and Moderation",
     "الإيجاز والإطناب والمساواة", "brevity-verbosity-and-moderation",
     "The length of the utterance is tuned to the communicative need: "
     "compressed for impact, expanded for clarification or affirmation, or "
     "evenly measured.",
     None),
    ("A-10", "Foregrounding and Backgrounding / Anastrophe",
     "التقديم والتأخير", "foregrounding-and-backgrounding",
     "Lexical items are moved toward the front of the sentence for emphasis "
     "or toward the end to de-emphasise or build suspense.",
     None),
    ("A-11", "Ellipsis", "الذكر والحذف", "ellipsis",
     "Lexical items are omitted for succinctness, emotion, suspense or "
     "rhyme where the addressee can recover them from context.",
     None),
    ("A-12", "Exophora", "الإضمار مقام الإظهار", "exophora",
     "A pronoun is used without an explicit antecedent because context or "
     "shared knowledge identifies the referent.",
     None),
    ("A-13", "Use of Noun in Place of Pronoun", "الإظهار مقام الإضمار",
     "noun-in-place-of-pronoun",
     "The explicit name is repeated where a pronoun would normally stand, "
     "spotlighting the named referent.",
     None),
    ("A-14", "Use of Appropriate Linguistic Style and Register",
     "استخدام الأسلوب المناسب", "appropriate-style-and-register",
     "The style and register fit the subject matter and audience, from "
     "technical exposition to evocative fiction.",
     "Scored on fit: 0 inappropriate register, 1 somewhat appropriate, "
     "2 totally appropriate."),

    # Domain B: figures of speech
    ("B-1", "Simile", "التشبيه", "simile",
     "Something is likened to something else sharing a common attribute; "
     "the fewer of its components are spelt out, the stronger the simile.",
     None),
    ("B-2", "Metaphor", "الاستعارة", "metaphor",
     "A compressed simile in which the likened or the likened-to is "
     "omitted; explicit, implicit and enhanced forms all qualify.",
     None),
    ("B-3", "Allegory", "المجاز", "allegory",
     "A word is used in a closely related non-literal way, either through a "
     "non-literal verb subject or through a stated lexical relationship.",
     None),
    ("B-4", "Metonymy / Implicit Reference", "الكناية", "metonymy",
     "A descriptive phrase alluding to intrinsic characteristics stands in "
     "for the real name while remaining literally possible.",
     None),
    ("B-5", "Hinting", "التعريض", "hinting",
     "The intended meaning is suggested indirectly through aphorism, "
     "proverb, riddle or innuendo.",
     None),
    ("B-6", "Pun / Paronomasia / Double-Entendre", "التورية", "pun",
     "An expression carries more than one valid interpretation, playing the "
     "superficial meaning against the construed one.",
     "A lexical item classifiable under several figures of speech scores "
     "once within this domain; a figurative plus a non-figurative device "
     "may each score."),

    # Domain C, Part A: word choice
    ("CA-1", "Meaningful Proper Nouns", "التوجيه", "meaningful-proper-nouns",
     "Names of people or places are chosen for their meanings or for the "
     "multiple readings they allow.",
     None),
    ("CA-2", "Oxymoron", "الاراداف الخلفي / اجتماع لفظتين متناقضتين",
     "oxymoron",
     "Two antonyms are co-located in one expression.",
     None),
    ("CA-3", "Amphibology", "الإبهام", "amphibology",
     "A word or phrase is deliberately ambiguous between two opposite "
     "readings.",
     None),
    ("CA-4", "Onomatopoeia", "المحاكاة الصوتية", "onomatopoeia",
     "The pronunciation of a word mimics the sound it denotes.",
     None),
    ("CA-5", "Litotes", "الإثبات بالنفي", "litotes",
     "A quality is asserted by negating its antonym.",
     None),
    ("CA-6", "Alliteration", "المجانسة الاستهلاكية", "alliteration",
     "A succession of words shares the same initial letter.",
     None),
    ("CA-7", "Palindrome", "القلب / ما لا يستحيل بالانعكاس", "palindrome",
     "A lexical item reads the same forwards and backwards.",
     None),
    ("CA-8", "Equivocation", "المواربة", "equivocation",
     "A word is chosen so that a small alteration of it flips the meaning.",
     None),
    ("CA-9", "Adornment", "التدبيج", "adornment",
     "Contrasting colours are named together for decorative effect.",
     None),
    ("CA-10", "Metabole", "التكرار بعبارات مختلفة", "metabole",
     "The same idea is restated through a run of different modifiers or "
     "phrasings.",
     None),
    ("CA-11", "Zeugma", "العبارة الجامعة", "zeugma",
     "One word or expression modifies two others, bearing a different sense "
     "with each.",
     None),
    ("CA-12", "Al-Istikhdām", "الاستخدام", "al-istikhdam",
     "A pronoun apparently refers back to a mentioned thing while actually "
     "intending something related but different.",
     None),
    ("CA-13", "Epizeuxis", "التكرار التوكيدي / التوكيد اللفظي", "epizeuxis",
     "The same word or expression is repeated for affirmation.",
     None),
    ("CA-14", "Epistrophe", "تكرار النهاية", "epistrophe",
     "The same word or expression recurs at the ends of successive "
     "sentences.",
     None),

    # Domain C, Part B: addressing groups
    ("CB-1", "Congeries", "مراجعة النظير", "congeries",
     "Discrete items related to the referent are gathered together to "
     "amplify the effect.",
     None),
    ("CB-2", "Collectiveness", "الجمع", "collectiveness",
     "Several things are combined under a single collective verdict or "
     "judgement.",
     None),
    ("CB-3", "Al-Taqsīm", "التقسيم", "al-taqsim",
     "All members of a group are enumerated, or each member is paired with "
     "something specific to it.",
     None),
    ("CB-4", "Differentiation Between Similar Items", "التفريق",
     "differentiation-between-similar-items",
     "Two things that could be mistaken for one another are explicitly "
     "distinguished.",
     None),
    ("CB-5", "Epanodos", "الطبي والنشر / اللف والنشر", "epanodos",
     "Two or more items are listed, then elaborated, leaving the addressee "
     "to pair each elaboration with its item.",
     None),

    # Domain C, Part C: sentence construction
    ("CC-1", "Antithesis / Antonymy", "الطباق / المقابلة", "antithesis",
     "Antonyms or antonymic phrases appear together, directly or through "
     "negation, in any combination of nouns, verbs and particles.",
     "One or two marks per antonym pair, recorded as one occurrence per "
     "pair; three pairs scoring one mark each award three marks in total."),
    ("CC-2", "Chiasmus / Antimetabole", "المقابلة العكسية", "chiasmus",
     "A two-part construction reverses the word order of the first part in "
     "the second.",
     None),
    ("CC-3", "Al-Jinās", "الجناس / التجنيس", "al-jinas",
     "Two similar-sounding words with different meanings occur together, in "
     "complete or incomplete varieties.",
     None),
    ("CC-4", "Tail-Head", "رد العجز على الصدر / التصدير", "tail-head",
     "The first and last words of a sentence are the same or "
     "morphologically related.",
     None),
    ("CC-5", "Head-Tail", "رد الصدر على العجز", "head-tail",
     "The last word of one sentence recurs as the first word of the next.",
     None),
    ("CC-6", "Similarities of the Start & Finish", "تشابه الأطراف",
     "similarities-of-start-and-finish",
     "The end of a sentence shares its meaning with the start of the "
     "following sentence, bridging the two.",
     None),
    ("CC-7", "Parallelism", "الموازنة / مقابلة اللفظ باللفظ", "parallelism",
     "The lexical structure of a phrase is repeated across sentences, "
     "creating balance and rhyme.",
     None),

    # Domain C, Part D: musicality
    ("CD-1", "Assonance", "السجع", "assonance",
     "Vowel endings of the final words of successive sentences agree, "
     "producing prose rhyme.",
     "Three grades by how much morphology the sentence-final words share."),
    ("CD-2", "Homeoptoton", "الترصيع / المرادف", "homeoptoton",
     "The final part of a line's first hemistich agrees with the second "
     "hemistich in metre, voweling and rhyme.",
     None),
    ("CD-3", "Concordance of the Pronunciation and the Meaning",
     "ائتلاف اللفظ والمعنى", "concordance-of-pronunciation-and-meaning",
     "The sound texture of the words matches their meaning, soft sounds for "
     "soft tones and harsh for harsh.",
     None),
    ("CD-4", "Concordance of Pronunciations", "ائتلاف اللفظ مع اللفظ",
     "concordance-of-pronunciations",
     "Strange, unusual or rarely used words are deliberately co-located.",
     None),
    ("CD-5", "Al-Tashrī", "التشريع", "al-tashri",
     "Rhyme or metre survives even if some words are omitted from the "
     "line.",
     None),
    ("CD-6", "Proportioning", "الازدواج", "proportioning",
     "A sentence or paragraph is divided into parts of equal length and "
     "metre.",
     None),
    ("CD-7", "Excellence of Division", "حسن التقسيم",
     "excellence-of-division",
     "Each line of a poem is divided into two equal hemistichs.",
     None),

    # Domain C, Part E: strengthening the argument
    ("CE-1", "Integration of Imagery", "الإدماج", "integration-of-imagery",
     "Imagery implies the existence of something that is never explicitly "
     "mentioned.",
     None),
    ("CE-2", "Stacked-up Descriptions", "الاستتبع", "stacked-up-descriptions",
     "Two or more related statements of praise or criticism are linked for "
     "intensified effect.",
     None),
    ("CE-3", "Incorporation of Proverbs", "إرسال المثل / الكلام الجامع",
     "incorporation-of-proverbs",
     "A proverb, parable or well-known saying is woven in to strengthen the "
     "argument.",
     None),
    ("CE-4", "Abstraction", "التجريد", "abstraction",
     "The communicator side-tracks to something that epitomises the quality "
     "claimed for the original proposition.",
     None),
    ("CE-5", "Quotation", "الاقتباس", "quotation",
     "A well-known text is incorporated into the new text.",
     None),
    ("CE-6", "Hinting at the Source", "التلميح", "hinting-at-the-source",
     "An incorporated quotation is accompanied by a clue that points to its "
     "source.",
     None),
    ("CE-7", "Euphemism", "التهوين", "euphemism",
     "Something unpleasant or embarrassing is referred to implicitly rather "
     "than named.",
     None),
    ("CE-8", "Rhetorical Shift", "الالتفات", "rhetorical-shift",
     "The text shifts between persons, tenses, morphological forms or "
     "sentence types to keep the addressee engaged.",
     None),
    ("CE-9", "Epitrope", "التسليم الخطابي", "epitrope",
     "The opponent's argument is apparently conceded, then answered with "
     "its antithesis.",
     None),
    ("CE-10", "Evasive Response", "أسلوب الحكيم", "evasive-response",
     "A question is met with a deliberately evasive or ambiguous reply.",
     None),
    ("CE-11", "Feigned Ignorance", "تجاهل العارف", "feigned-ignorance",
     "The communicator pretends not to know something, to express "
     "amazement, praise, disapproval or familiarity.",
     None),
    ("CE-12", "Observation", "الإرصاد / التسهيم", "observation",
     "Early hints let the addressee predict how the utterance will end.",
     None),
    ("CE-13", "Apostrophe", "مخاطبة غير العاقل", "apostrophe",
     "A non-human object is directly addressed as if it were human.",
     "Score labels run 'present in a basic way' (1) to 'significantly adds "
     "value' (2); the scale itself is the usual 0-2."),
    ("CE-14", "Personification", "تشخيص، تجسيد", "personification",
     "Non-human objects are referred to as if they were human.",
     None),
    ("CE-15", "Hyperbole", "المبالغة", "hyperbole",
     "A proposition is exaggerated, in grades running from the possible and "
     "usual up to the conceptually impossible.",
     "Grade rises with the impossibility of the exaggerated proposition."),
    ("CE-16", "Beauty of Rationale / Fantastic Aetiology / Conceit",
     "حسن التعليل", "beauty-of-rationale",
     "The obvious cause of an event is denied in favour of a fanciful cause "
     "that serves the communicator's agenda.",
     None),
    ("CE-17", "Asteism / Affirmed Praise", "تأكيد المدح بما يُشبه الذم",
     "affirmed-praise",
     "Praise is interrupted by an apparent exception that turns out to "
     "reinforce the praise.",
     None),
    ("CE-18", "Affirmed Dispraise", "تأكيد الذم بما يُشبه المدح",
     "affirmed-dispraise",
     "Criticism is interrupted by an apparent exception that turns out to "
     "reinforce the criticism.",
     None),
    ("CE-19", "Al-Mughāyra", "المغايرة", "al-mughayra",
     "Praise is followed by criticism of the same thing, or criticism by "
     "praise.",
     None),
    ("CE-20", "Tapinosis", "التحقير", "tapinosis",
     "Something is depreciated by naming it with terms beneath its real "
     "standing.",
     None),
    ("CE-21", "Sarcasm", "الاستهزاء", "sarcasm",
     "An ostensibly positive statement is meant, and can be understood, as "
     "criticism or rebuke.",
     None),
    ("CE-22", "Scholastic Approach / Dialectical Mannerism",
     "المذهب الكلامي", "scholastic-approach",
     "Reasoning, logic or evidence is deployed to prove the proposition or "
     "refute opposing views.",
     None),

    # Domain C, Part F: paragraph construction
    ("CF-1", "Multi-Genre", "الافتنان", "multi-genre",
     "Two or more literary arts, such as eulogy and satire, are combined in "
     "one piece.",
     None),
    ("CF-2", "Pleasantness of the Opening", "حسن الابداء",
     "pleasantness-of-the-opening",
     "The text opens in a pleasant, agreeable manner that wins over the "
     "addressee.",
     None),
    ("CF-3", "Exordium / Finesse of Initiation", "براعة الاستهلال",
     "exordium",
     "The opening hints at the main objective and makes the addressee eager "
     "for the core proposition.",
     None),
    ("CF-4", "Digression / Excursus", "الاستطراد", "digression",
     "The text departs to a contrasting topic and then returns to complete "
     "the original one.",
     None),
    ("CF-5", "Change of Topic", "حسن التخلص", "change-of-topic",
     "The transition from introduction to main point is smooth, connected "
     "and subtle.",
     None),
    ("CF-6", "Finesse of Requesting", "براعة الطلب", "finesse-of-requesting",
     "A desire or need is conveyed without an explicit request, leaving the "
     "addressee to infer it.",
     None),
    ("CF-7", "Pleasantness of the Ending", "حسن الانتهاء",
     "pleasantness-of-the-ending",
     "The text closes in a manner lexically pleasing to the addressee.",
     None),
    ("CF-8", "Finesse of the Ending", "براعة المقطع", "finesse-of-the-ending",
     "The close links back to and summarises the text's objective, giving a "
     "satisfying semantic conclusion.",
     None),

    # Domain C, Part G: miscellaneous
    ("CG-1", "Negative Elements in the Text", "الأساليب السلبية",
     "negative-elements",
     "Features that detract from eloquence: inkhorn loan transliterations, "
     "catachresis, grammar or morphology errors, phonetic incongruity, and "
     "unfamiliar usage.",
     "One mark is deducted for each occurrence."),
]
