"""Author and freeze the bundled datasets.

The JSON files under src/artemus/datasets/ are frozen artifacts: tests pin
their content hashes, so regenerating them is a deliberate act. This
script is the single authoring source. It parses, validates (zero Errors
required) and writes canonical bytes.

Run from the repository root:  python tools/build_datasets.py
"""
from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from artemus.model import canonical_json_bytes, parse_graph, serialize_graph  # noqa: E402
from artemus.validation import Severity, validate  # noqa: E402

OUT_DIR = pathlib.Path(__file__).resolve().parents[1] / "src" / "artemus" / "datasets"


def text(en: str, cy: str) -> dict:
    return {"en": en, "cy": cy}


DISCLAIMER = text(
    "This tool provides legal information, not legal advice, and it will not ask you for "
    "any personal information. The bodies, pathways and time limits shown are ILLUSTRATIVE "
    "examples for demonstration and may not reflect current law. If your issue involves a "
    "claim in a court or tribunal, or you are unsure what applies to you, please seek "
    "advice from a qualified adviser; advice links are provided along the pathways.",
    "Mae'r offeryn hwn yn darparu gwybodaeth gyfreithiol, nid cyngor cyfreithiol, ac ni fydd "
    "yn gofyn i chi am unrhyw wybodaeth bersonol. Mae'r cyrff, y llwybrau a'r terfynau amser "
    "a ddangosir yn enghreifftiau DARLUNIADOL at ddibenion arddangos ac efallai nad ydynt yn "
    "adlewyrchu'r gyfraith gyfredol. Os yw eich mater yn ymwneud â hawliad mewn llys neu "
    "dribiwnlys, neu os nad ydych yn siŵr beth sy'n berthnasol i chi, gofynnwch am gyngor gan "
    "ymgynghorydd cymwysedig; darperir dolenni cyngor ar hyd y llwybrau.",
)

OMBUDSMAN_EXPLANATION = text(
    "You can complain to the Public Services Ombudsman for Wales about maladministration: "
    "where you feel you have been treated unfairly or received a bad service. If you have a "
    "right to take the matter to a court or tribunal, usually the Ombudsman will not be able "
    "to look into your complaint at the same time.",
    "Gallwch gwyno i Ombwdsmon Gwasanaethau Cyhoeddus Cymru am gamweinyddu: lle rydych yn "
    "teimlo eich bod wedi cael eich trin yn annheg neu wedi cael gwasanaeth gwael. Os oes "
    "gennych hawl i fynd â'r mater i lys neu dribiwnlys, fel arfer ni fydd yr Ombwdsmon yn "
    "gallu ymchwilio i'ch cwyn ar yr un pryd.",
)

COURT_OR_OMBUDSMAN = text(
    "Court and Ombudsman routes are alternatives. If you appeal to a court or seek judicial "
    "review, usually the Ombudsman will not be able to look into the same matter at the "
    "same time, and once the Ombudsman is investigating the court routes close. In rare "
    "cases both can be open; ask an adviser before relying on that.",
    "Mae llwybrau'r llys a'r Ombwdsmon yn ddewisiadau amgen. Os apeliwch i lys neu geisio "
    "adolygiad barnwrol, fel arfer ni fydd yr Ombwdsmon yn gallu ymchwilio i'r un mater ar "
    "yr un pryd, ac unwaith y bydd yr Ombwdsmon yn ymchwilio mae llwybrau'r llys yn cau. "
    "Mewn achosion prin gall y ddau fod ar agor; gofynnwch i ymgynghorydd cyn dibynnu ar hynny.",
)

ADVICE_LINKS_HOUSING = [
    {
        "label": text("Shelter Cymru housing advice", "Cyngor tai Shelter Cymru"),
        "url": "https://sheltercymru.org.uk/get-advice/",
    },
    {
        "label": text("Citizens Advice Wales", "Cyngor ar Bopeth Cymru"),
        "url": "https://www.citizensadvice.org.uk/wales/housing/",
    },
]

ADVICE_LINKS_COURT = [
    {
        "label": text("Citizens Advice: going to court", "Cyngor ar Bopeth: mynd i'r llys"),
        "url": "https://www.citizensadvice.org.uk/wales/law-and-courts/",
    },
    {
        "label": text("Law Society: find a solicitor", "Cymdeithas y Gyfraith: dod o hyd i gyfreithiwr"),
        "url": "https://solicitors.lawsociety.org.uk/",
    },
]

ADVICE_LINKS_EDUCATION = [
    {
        "label": text("SNAP Cymru education advice", "Cyngor addysg SNAP Cymru"),
        "url": "https://www.snapcymru.org/",
    },
    {
        "label": text("Citizens Advice Wales", "Cyngor ar Bopeth Cymru"),
        "url": "https://www.citizensadvice.org.uk/wales/family/education/",
    },
]


HOUSING = {
    "schemaVersion": "artemus-graph/1",
    "id": "housing",
    "title": text(
        "Housing and homelessness redress pathways",
        "Llwybrau unioni cam ym maes tai a digartrefedd",
    ),
    "disclaimer": DISCLAIMER,
    "nodes": [
        {
            "id": "la-homelessness",
            "category": "LocalAuthority",
            "title": text(
                "Local authority homelessness decision",
                "Penderfyniad digartrefedd yr awdurdod lleol",
            ),
            "summary": text(
                "The local authority has made a decision about its homelessness duties "
                "towards you, for example that it owes you no duty to secure accommodation.",
                "Mae'r awdurdod lleol wedi gwneud penderfyniad am ei ddyletswyddau "
                "digartrefedd tuag atoch, er enghraifft nad oes dyletswydd arno i sicrhau "
                "llety i chi.",
            ),
            "detail": text(
                "Local authorities owe a series of duties to people who are homeless or "
                "threatened with homelessness. If you think a decision is wrong, or you were "
                "treated badly while it was made, different routes of redress are open to "
                "you — and taking one route can close another. The options below explain "
                "what each involves. (ILLUSTRATIVE example map.)",
                "Mae awdurdodau lleol yn ddyledus â chyfres o ddyletswyddau i bobl sy'n "
                "ddigartref neu dan fygythiad o ddigartrefedd. Os credwch fod penderfyniad "
                "yn anghywir, neu i chi gael eich trin yn wael wrth iddo gael ei wneud, mae "
                "gwahanol lwybrau unioni ar agor i chi — a gall dilyn un llwybr gau un "
                "arall. Mae'r opsiynau isod yn esbonio beth mae pob un yn ei olygu. (Map "
                "enghreifftiol DARLUNIADOL.)",
            ),
            "adviceLinks": ADVICE_LINKS_HOUSING,
            "disclaimerRequired": False,
        },
        {
            "id": "la-review",
            "category": "LocalAuthority",
            "title": text("Authority review decision", "Penderfyniad adolygu'r awdurdod"),
            "summary": text(
                "The local authority has reconsidered its original decision and issued a "
                "review decision.",
                "Mae'r awdurdod lleol wedi ailystyried ei benderfyniad gwreiddiol ac wedi "
                "cyhoeddi penderfyniad adolygu.",
            ),
            "detail": text(
                "A reviewing officer who was not involved in the original decision looks at "
                "it again. The review may confirm, vary or replace the decision. What you "
                "can do next depends on the review outcome: accept it, appeal on a point of "
                "law, or complain about how you were treated. (ILLUSTRATIVE.)",
                "Mae swyddog adolygu nad oedd yn rhan o'r penderfyniad gwreiddiol yn edrych "
                "arno eto. Gall yr adolygiad gadarnhau, amrywio neu ddisodli'r penderfyniad. "
                "Mae'r hyn y gallwch ei wneud nesaf yn dibynnu ar ganlyniad yr adolygiad: "
                "ei dderbyn, apelio ar bwynt cyfreithiol, neu gwyno am sut y cawsoch eich "
                "trin. (DARLUNIADOL.)",
            ),
            "adviceLinks": ADVICE_LINKS_HOUSING,
            "disclaimerRequired": False,
        },
        {
            "id": "county-court",
            "category": "Court",
            "title": text("County Court", "Y Llys Sirol"),
            "summary": text(
                "The County Court hears appeals against homelessness review decisions on "
                "points of law.",
                "Mae'r Llys Sirol yn gwrando apeliadau yn erbyn penderfyniadau adolygu "
                "digartrefedd ar bwyntiau cyfreithiol.",
            ),
            "detail": text(
                "An appeal to the County Court is a legal claim: the court asks whether the "
                "authority got the law wrong, not whether a different decision would have "
                "been kinder. Strict time limits apply and you may be liable for costs. "
                "Seek advice before starting a claim. (ILLUSTRATIVE.)",
                "Mae apêl i'r Llys Sirol yn hawliad cyfreithiol: mae'r llys yn gofyn a "
                "gafodd yr awdurdod y gyfraith yn anghywir, nid a fyddai penderfyniad "
                "gwahanol wedi bod yn garedig. Mae terfynau amser llym yn berthnasol a "
                "gallech fod yn atebol am gostau. Gofynnwch am gyngor cyn dechrau hawliad. "
                "(DARLUNIADOL.)",
            ),
            "adviceLinks": ADVICE_LINKS_COURT,
            "disclaimerRequired": True,
        },
        {
            "id": "court-of-appeal",
            "category": "Court",
            "title": text("England and Wales Court of Appeal", "Llys Apêl Cymru a Lloegr"),
            "summary": text(
                "The Court of Appeal can hear a further appeal against the County Court's "
                "decision, with permission.",
                "Gall y Llys Apêl wrando apêl bellach yn erbyn penderfyniad y Llys Sirol, "
                "gyda chaniatâd.",
            ),
            "detail": text(
                "Second appeals are exceptional: the Court of Appeal gives permission only "
                "where a case raises an important point of principle or practice, or there "
                "is some other compelling reason to hear it. Specialist advice is essential. "
                "(ILLUSTRATIVE.)",
                "Mae ail apeliadau yn eithriadol: dim ond lle mae achos yn codi pwynt "
                "pwysig o egwyddor neu ymarfer, neu lle mae rheswm cymhellol arall dros ei "
                "wrando, y mae'r Llys Apêl yn rhoi caniatâd. Mae cyngor arbenigol yn "
                "hanfodol. (DARLUNIADOL.)",
            ),
            "adviceLinks": ADVICE_LINKS_COURT,
            "disclaimerRequired": True,
        },
        {
            "id": "admin-court",
            "category": "Court",
            "title": text("Administrative Court", "Y Llys Gweinyddol"),
            "summary": text(
                "The Administrative Court judicially reviews how public decisions were "
                "made.",
                "Mae'r Llys Gweinyddol yn adolygu'n farnwrol sut y gwnaed penderfyniadau "
                "cyhoeddus.",
            ),
            "detail": text(
                "Judicial review looks at the way a decision was reached — fairness, "
                "legality, rationality — rather than at its merits. It is a remedy of last "
                "resort and the court expects other routes to have been used first. "
                "(ILLUSTRATIVE.)",
                "Mae adolygiad barnwrol yn edrych ar y ffordd y daethpwyd i benderfyniad — "
                "tegwch, cyfreithlondeb, rhesymoldeb — yn hytrach nag ar ei rinweddau. Mae'n "
                "rhwymedi dewis olaf ac mae'r llys yn disgwyl i lwybrau eraill fod wedi'u "
                "defnyddio'n gyntaf. (DARLUNIADOL.)",
            ),
            "adviceLinks": ADVICE_LINKS_COURT,
            "disclaimerRequired": True,
        },
        {
            "id": "ombudsman",
            "category": "Ombudsman",
            "title": text(
                "Public Services Ombudsman for Wales",
                "Ombwdsmon Gwasanaethau Cyhoeddus Cymru",
            ),
            "summary": text(
                "The Ombudsman investigates complaints of maladministration by Welsh public "
                "bodies, free of charge.",
                "Mae'r Ombwdsmon yn ymchwilio i gwynion am gamweinyddu gan gyrff cyhoeddus "
                "Cymru, yn rhad ac am ddim.",
            ),
            "detail": text(
                "The Ombudsman looks at whether you were treated unfairly or received a bad "
                "service, and can recommend an apology, a payment or a change of practice. "
                "The Ombudsman cannot overturn a decision the way a court can, and usually "
                "cannot investigate while a court route is open to you. (ILLUSTRATIVE.)",
                "Mae'r Ombwdsmon yn ystyried a gawsoch eich trin yn annheg neu wasanaeth "
                "gwael, a gall argymell ymddiheuriad, taliad neu newid arfer. Ni all yr "
                "Ombwdsmon wrthdroi penderfyniad fel y gall llys, ac fel arfer ni all "
                "ymchwilio tra bo llwybr llys ar agor i chi. (DARLUNIADOL.)",
            ),
            "adviceLinks": [
                {
                    "label": text(
                        "Public Services Ombudsman for Wales",
                        "Ombwdsmon Gwasanaethau Cyhoeddus Cymru",
                    ),
                    "url": "https://www.ombudsman.wales/",
                }
            ],
            "disclaimerRequired": False,
        },
        {
            "id": "advice-service",
            "category": "AdviceProvider",
            "title": text("Independent housing advice", "Cyngor tai annibynnol"),
            "summary": text(
                "Free, independent advisers can help you choose between the routes and can "
                "sometimes resolve the problem without formal redress.",
                "Gall ymgynghorwyr annibynnol, am ddim, eich helpu i ddewis rhwng y "
                "llwybrau a gallant weithiau ddatrys y broblem heb unioni ffurfiol.",
            ),
            "detail": text(
                "Advice agencies such as Shelter Cymru and Citizens Advice help people "
                "challenge homelessness decisions every day. Getting advice does not close "
                "any route and does not stop any time limit running. (ILLUSTRATIVE.)",
                "Mae asiantaethau cyngor fel Shelter Cymru a Chyngor ar Bopeth yn helpu "
                "pobl i herio penderfyniadau digartrefedd bob dydd. Nid yw cael cyngor yn "
                "cau unrhyw lwybr ac nid yw'n atal unrhyw derfyn amser rhag rhedeg. "
                "(DARLUNIADOL.)",
            ),
            "adviceLinks": ADVICE_LINKS_HOUSING,
            "disclaimerRequired": False,
        },
        {
            "id": "outcome-resolved",
            "category": "Outcome",
            "title": text(
                "Matter resolved with the authority",
                "Mater wedi'i ddatrys gyda'r awdurdod",
            ),
            "summary": text(
                "The dispute ends here: the review resolved the matter, or you accepted "
                "the reviewed decision.",
                "Daw'r anghydfod i ben yma: datrysodd yr adolygiad y mater, neu fe "
                "dderbynioch y penderfyniad a adolygwyd.",
            ),
            "detail": text(
                "Many homelessness disputes end at review, either because the authority "
                "changes its decision or because the review explains it in a way the "
                "applicant accepts. No further action is needed. (ILLUSTRATIVE.)",
                "Daw llawer o anghydfodau digartrefedd i ben yn yr adolygiad, naill ai am "
                "fod yr awdurdod yn newid ei benderfyniad neu am fod yr adolygiad yn ei "
                "esbonio mewn ffordd y mae'r ymgeisydd yn ei derbyn. Nid oes angen camau "
                "pellach. (DARLUNIADOL.)",
            ),
            "adviceLinks": [],
            "disclaimerRequired": False,
        },
        {
            "id": "outcome-court-decision",
            "category": "Outcome",
            "title": text(
                "County Court decision on the appeal",
                "Penderfyniad y Llys Sirol ar yr apêl",
            ),
            "summary": text(
                "The County Court has heard the appeal and made a binding ruling.",
                "Mae'r Llys Sirol wedi gwrando'r apêl ac wedi gwneud dyfarniad rhwymol.",
            ),
            "detail": text(
                "The court may confirm the authority's decision, quash it, or vary it. "
                "If the ruling goes against you, only the further court routes remain. "
                "(ILLUSTRATIVE.)",
                "Gall y llys gadarnhau penderfyniad yr awdurdod, ei ddiddymu, neu ei "
                "amrywio. Os yw'r dyfarniad yn mynd yn eich erbyn, dim ond llwybrau "
                "pellach y llysoedd sydd ar ôl. (DARLUNIADOL.)",
            ),
            "adviceLinks": [],
            "disclaimerRequired": False,
        },
    ],
    "edges": [
        {
            "id": "reconsider",
            "from": "la-homelessness",
            "to": "la-review",
            "kind": "InternalReview",
            "label": text(
                "Ask the authority to reconsider its decision",
                "Gofyn i'r awdurdod ailystyried ei benderfyniad",
            ),
            "explanation": text(
                "You should first ask the local authority to reconsider its decision. A "
                "different officer reviews it and can change it without any court being "
                "involved. Most other routes expect this step to have happened. "
                "(ILLUSTRATIVE time limit.)",
                "Dylech yn gyntaf ofyn i'r awdurdod lleol ailystyried ei benderfyniad. Mae "
                "swyddog gwahanol yn ei adolygu a gall ei newid heb i unrhyw lys fod yn "
                "rhan o'r peth. Mae'r rhan fwyaf o'r llwybrau eraill yn disgwyl i'r cam hwn "
                "fod wedi digwydd. (Terfyn amser DARLUNIADOL.)",
            ),
            "timeLimitDays": 21,
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
        {
            "id": "county-appeal-direct",
            "from": "la-homelessness",
            "to": "county-court",
            "kind": "Appeal",
            "label": text("Appeal to the County Court", "Apelio i'r Llys Sirol"),
            "explanation": text(
                "After you have asked the local authority to reconsider its decision, if "
                "you still believe it is wrong in law you can appeal to the County Court. "
                "The appeal is against the reviewed decision, so the reconsideration comes "
                "first. (ILLUSTRATIVE time limit.)",
                "Ar ôl i chi ofyn i'r awdurdod lleol ailystyried ei benderfyniad, os ydych "
                "yn dal i gredu ei fod yn anghywir yn ôl y gyfraith gallwch apelio i'r Llys "
                "Sirol. Mae'r apêl yn erbyn y penderfyniad a adolygwyd, felly daw'r "
                "ailystyriaeth yn gyntaf. (Terfyn amser DARLUNIADOL.)",
            ),
            "timeLimitDays": 21,
            "preActionProtocol": False,
            "disclaimerRequired": True,
        },
        {
            "id": "ombudsman-complaint",
            "from": "la-homelessness",
            "to": "ombudsman",
            "kind": "Complaint",
            "label": text(
                "Complain to the Public Services Ombudsman for Wales",
                "Cwyno i Ombwdsmon Gwasanaethau Cyhoeddus Cymru",
            ),
            "explanation": OMBUDSMAN_EXPLANATION,
            "timeLimitDays": 365,
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
        {
            "id": "get-advice",
            "from": "la-homelessness",
            "to": "advice-service",
            "kind": "Signpost",
            "label": text("Get independent advice", "Cael cyngor annibynnol"),
            "explanation": text(
                "An independent adviser can look at the decision letter with you and help "
                "you choose a route. This signpost closes nothing and costs nothing.",
                "Gall ymgynghorydd annibynnol edrych ar y llythyr penderfyniad gyda chi a'ch "
                "helpu i ddewis llwybr. Nid yw'r cyfeiriad hwn yn cau dim ac nid yw'n costio "
                "dim.",
            ),
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
        {
            "id": "accept-review",
            "from": "la-review",
            "to": "outcome-resolved",
            "kind": "Signpost",
            "label": text(
                "Accept the review decision",
                "Derbyn y penderfyniad adolygu",
            ),
            "explanation": text(
                "If the review resolves the matter — for example the authority now accepts "
                "a duty towards you — the dispute ends here.",
                "Os yw'r adolygiad yn datrys y mater — er enghraifft mae'r awdurdod bellach "
                "yn derbyn dyletswydd tuag atoch — daw'r anghydfod i ben yma.",
            ),
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
        {
            "id": "county-appeal",
            "from": "la-review",
            "to": "county-court",
            "kind": "Appeal",
            "label": text("Appeal to the County Court", "Apelio i'r Llys Sirol"),
            "explanation": text(
                "After you have asked the local authority to reconsider its decision, if "
                "you still believe the reviewed decision is wrong in law you can appeal to "
                "the County Court within the time limit. The court decides points of law, "
                "not whether the decision was kind. (ILLUSTRATIVE time limit.)",
                "Ar ôl i chi ofyn i'r awdurdod lleol ailystyried ei benderfyniad, os ydych "
                "yn dal i gredu bod y penderfyniad a adolygwyd yn anghywir yn ôl y gyfraith "
                "gallwch apelio i'r Llys Sirol o fewn y terfyn amser. Y pwyntiau cyfreithiol "
                "y mae'r llys yn eu penderfynu, nid a oedd y penderfyniad yn garedig. "
                "(Terfyn amser DARLUNIADOL.)",
            ),
            "timeLimitDays": 21,
            "preActionProtocol": False,
            "disclaimerRequired": True,
        },
        {
            "id": "ombudsman-from-review",
            "from": "la-review",
            "to": "ombudsman",
            "kind": "Complaint",
            "label": text(
                "Complain to the Public Services Ombudsman for Wales",
                "Cwyno i Ombwdsmon Gwasanaethau Cyhoeddus Cymru",
            ),
            "explanation": OMBUDSMAN_EXPLANATION,
            "timeLimitDays": 365,
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
        {
            "id": "coa-appeal",
            "from": "county-court",
            "to": "court-of-appeal",
            "kind": "Appeal",
            "label": text(
                "Appeal to the England and Wales Court of Appeal",
                "Apelio i Lys Apêl Cymru a Lloegr",
            ),
            "explanation": text(
                "If you think the County Court got the law wrong, you may be able to take "
                "a further appeal to the England and Wales Court of Appeal. Permission is "
                "needed and is rarely given; specialist advice is essential. (ILLUSTRATIVE "
                "time limit.)",
                "Os credwch fod y Llys Sirol wedi cael y gyfraith yn anghywir, efallai y "
                "gallwch fynd ag apêl bellach i Lys Apêl Cymru a Lloegr. Mae angen caniatâd "
                "ac anaml y caiff ei roi; mae cyngor arbenigol yn hanfodol. (Terfyn amser "
                "DARLUNIADOL.)",
            ),
            "timeLimitDays": 21,
            "preActionProtocol": False,
            "disclaimerRequired": True,
        },
        {
            "id": "jr-admin-court",
            "from": "county-court",
            "to": "admin-court",
            "kind": "JudicialReview",
            "label": text(
                "Seek judicial review in the Administrative Court",
                "Ceisio adolygiad barnwrol yn y Llys Gweinyddol",
            ),
            "explanation": text(
                "If you believe the decision was reached in a way that was unlawful or "
                "procedurally unfair, you may be able to seek judicial review in the "
                "Administrative Court. This route is rarely used: the court reviews how "
                "the decision was made, not its merits. A claim must be made promptly and "
                "in any event within three months of the decision under dispute, and the "
                "pre-action protocol expects you to have tried the alternatives first.",
                "Os credwch i'r penderfyniad gael ei wneud mewn ffordd a oedd yn "
                "anghyfreithlon neu'n annheg o ran gweithdrefn, efallai y gallwch geisio "
                "adolygiad barnwrol yn y Llys Gweinyddol. Anaml y defnyddir y llwybr hwn: "
                "adolygu sut y gwnaed y penderfyniad y mae'r llys, nid ei rinweddau. Rhaid "
                "gwneud hawliad yn brydlon a beth bynnag o fewn tri mis i'r penderfyniad "
                "sydd dan anghydfod, ac mae'r protocol cyn-achos yn disgwyl i chi fod wedi "
                "rhoi cynnig ar y dewisiadau eraill yn gyntaf.",
            ),
            "timeLimitDays": 90,
            "preActionProtocol": True,
            "disclaimerRequired": True,
        },
        {
            "id": "ombudsman-from-court",
            "from": "county-court",
            "to": "ombudsman",
            "kind": "Complaint",
            "label": text(
                "Complain to the Public Services Ombudsman for Wales",
                "Cwyno i Ombwdsmon Gwasanaethau Cyhoeddus Cymru",
            ),
            "explanation": OMBUDSMAN_EXPLANATION,
            "timeLimitDays": 365,
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
        {
            "id": "await-court-decision",
            "from": "county-court",
            "to": "outcome-court-decision",
            "kind": "Signpost",
            "label": text(
                "Continue to the court's decision",
                "Parhau at benderfyniad y llys",
            ),
            "explanation": text(
                "The County Court hears the appeal and delivers a binding ruling, which "
                "may confirm, quash or vary the authority's decision.",
                "Mae'r Llys Sirol yn gwrando'r apêl ac yn cyflwyno dyfarniad rhwymol, a "
                "all gadarnhau, diddymu neu amrywio penderfyniad yr awdurdod.",
            ),
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
    ],
    "entryPoints": [
        {
            "id": "homelessness-entry",
            "node": "la-homelessness",
            "description": text(
                "You have just been made homeless, or the council has made a homelessness "
                "decision you disagree with.",
                "Rydych newydd fynd yn ddigartref, neu mae'r cyngor wedi gwneud "
                "penderfyniad digartrefedd rydych yn anghytuno ag ef.",
            ),
            "keywords": {
                "en": [
                    "made homeless",
                    "homeless",
                    "homelessness",
                    "homelessness decision",
                    "nowhere to live",
                    "council refused housing",
                    "eviction",
                ],
                "cy": [
                    "digartref",
                    "digartrefedd",
                    "wedi colli cartref",
                    "penderfyniad digartrefedd",
                    "dim lle i fyw",
                    "troi allan",
                ],
            },
        }
    ],
    "exclusionGroups": [
        {
            "id": "court-vs-ombudsman-direct-appeal",
            "members": [
                "county-appeal-direct",
                "ombudsman-complaint",
                "ombudsman-from-review",
                "ombudsman-from-court",
            ],
            "explanation": COURT_OR_OMBUDSMAN,
        },
        {
            "id": "court-vs-ombudsman-review-appeal",
            "members": [
                "county-appeal",
                "ombudsman-complaint",
                "ombudsman-from-review",
                "ombudsman-from-court",
            ],
            "explanation": COURT_OR_OMBUDSMAN,
        },
        {
            "id": "court-vs-ombudsman-second-appeal",
            "members": [
                "coa-appeal",
                "ombudsman-complaint",
                "ombudsman-from-review",
                "ombudsman-from-court",
            ],
            "explanation": COURT_OR_OMBUDSMAN,
        },
        {
            "id": "court-vs-ombudsman-judicial-review",
            "members": [
                "jr-admin-court",
                "ombudsman-complaint",
                "ombudsman-from-review",
                "ombudsman-from-court",
            ],
            "explanation": COURT_OR_OMBUDSMAN,
        },
    ],
    "prerequisiteRules": [
        {
            "edge": "county-appeal-direct",
            "requires": ["reconsider"],
            "explanation": text(
                "You can appeal to the County Court only after you have asked the "
                "authority to reconsider its decision: the appeal is against the reviewed "
                "decision.",
                "Dim ond ar ôl i chi ofyn i'r awdurdod ailystyried ei benderfyniad y "
                "gallwch apelio i'r Llys Sirol: yn erbyn y penderfyniad a adolygwyd y "
                "mae'r apêl.",
            ),
        },
        {
            "edge": "county-appeal",
            "requires": ["reconsider"],
            "explanation": text(
                "You can appeal to the County Court only after you have asked the "
                "authority to reconsider its decision: the appeal is against the reviewed "
                "decision.",
                "Dim ond ar ôl i chi ofyn i'r awdurdod ailystyried ei benderfyniad y "
                "gallwch apelio i'r Llys Sirol: yn erbyn y penderfyniad a adolygwyd y "
                "mae'r apêl.",
            ),
        },
    ],
}


EDUCATION = {
    "schemaVersion": "artemus-graph/1",
    "id": "education",
    "title": text(
        "School exclusion redress pathways",
        "Llwybrau unioni cam gwaharddiadau ysgol",
    ),
    "disclaimer": DISCLAIMER,
    "nodes": [
        {
            "id": "excl-permanent",
            "category": "School",
            "title": text(
                "Permanent exclusion from school",
                "Gwaharddiad parhaol o'r ysgol",
            ),
            "summary": text(
                "The head teacher has permanently excluded your child from school.",
                "Mae'r pennaeth wedi gwahardd eich plentyn yn barhaol o'r ysgol.",
            ),
            "detail": text(
                "A permanent exclusion carries the strongest rights of challenge: the "
                "governing body must review it if you ask, and an independent appeal panel "
                "sits above the governing body. Discrimination claims go to the Education "
                "Tribunal instead. Your rights differ for fixed-term exclusions, so make "
                "sure you are on the right pathway. (ILLUSTRATIVE example map.)",
                "Gwaharddiad parhaol sy'n cario'r hawliau herio cryfaf: rhaid i'r corff "
                "llywodraethu ei adolygu os gofynnwch, ac mae panel apêl annibynnol yn "
                "eistedd uwchlaw'r corff llywodraethu. Aiff hawliadau gwahaniaethu i'r "
                "Tribiwnlys Addysg yn lle hynny. Mae eich hawliau'n wahanol ar gyfer "
                "gwaharddiadau cyfnod penodol, felly gwnewch yn siŵr eich bod ar y llwybr "
                "cywir. (Map enghreifftiol DARLUNIADOL.)",
            ),
            "adviceLinks": ADVICE_LINKS_EDUCATION,
            "disclaimerRequired": False,
        },
        {
            "id": "excl-fixed-long",
            "category": "School",
            "title": text(
                "Fixed-term exclusion of more than five school days",
                "Gwaharddiad cyfnod penodol o fwy na phum diwrnod ysgol",
            ),
            "summary": text(
                "Your child has been excluded for a fixed period longer than five school "
                "days in a term.",
                "Mae eich plentyn wedi'i wahardd am gyfnod penodol hwy na phum diwrnod "
                "ysgol mewn tymor.",
            ),
            "detail": text(
                "For longer fixed-term exclusions the governing body must meet to consider "
                "reinstatement if you ask it to. There is no independent appeal panel for "
                "fixed-term exclusions — that route exists only for permanent exclusions. "
                "(ILLUSTRATIVE: the five-day threshold is an example.)",
                "Ar gyfer gwaharddiadau cyfnod penodol hirach rhaid i'r corff llywodraethu "
                "gyfarfod i ystyried adfer eich plentyn os gofynnwch iddo. Nid oes panel "
                "apêl annibynnol ar gyfer gwaharddiadau cyfnod penodol — dim ond ar gyfer "
                "gwaharddiadau parhaol y mae'r llwybr hwnnw'n bodoli. (DARLUNIADOL: "
                "enghraifft yw'r trothwy pum diwrnod.)",
            ),
            "adviceLinks": ADVICE_LINKS_EDUCATION,
            "disclaimerRequired": False,
        },
        {
            "id": "excl-fixed-short",
            "category": "School",
            "title": text(
                "Fixed-term exclusion of five school days or fewer",
                "Gwaharddiad cyfnod penodol o bum diwrnod ysgol neu lai",
            ),
            "summary": text(
                "Your child has been excluded for a short fixed period, up to five school "
                "days in a term.",
                "Mae eich plentyn wedi'i wahardd am gyfnod penodol byr, hyd at bum diwrnod "
                "ysgol mewn tymor.",
            ),
            "detail": text(
                "For short fixed-term exclusions the governing body must consider any "
                "representations you make, but cannot direct reinstatement, and there is "
                "no independent appeal panel. Complaints about how the exclusion was "
                "handled can still be made. (ILLUSTRATIVE: the five-day threshold is an "
                "example.)",
                "Ar gyfer gwaharddiadau cyfnod penodol byr rhaid i'r corff llywodraethu "
                "ystyried unrhyw sylwadau a wnewch, ond ni all gyfarwyddo adfer, ac nid "
                "oes panel apêl annibynnol. Gellir dal i wneud cwynion am sut yr ymdriniwyd "
                "â'r gwaharddiad. (DARLUNIADOL: enghraifft yw'r trothwy pum diwrnod.)",
            ),
            "adviceLinks": ADVICE_LINKS_EDUCATION,
            "disclaimerRequired": False,
        },
        {
            "id": "governing-body",
            "category": "School",
            "title": text(
                "School governing body discipline committee",
                "Pwyllgor disgyblu corff llywodraethu'r ysgol",
            ),
            "summary": text(
                "The governing body reviews the head teacher's exclusion decision and can "
                "reinstate the pupil.",
                "Mae'r corff llywodraethu yn adolygu penderfyniad gwahardd y pennaeth a "
                "gall adfer y disgybl.",
            ),
            "detail": text(
                "A committee of governors who were not involved in the exclusion hears "
                "from you and from the school. For permanent and longer fixed-term "
                "exclusions it can direct reinstatement; for short fixed-term exclusions "
                "it considers representations only. (ILLUSTRATIVE.)",
                "Mae pwyllgor o lywodraethwyr nad oeddent yn rhan o'r gwaharddiad yn "
                "gwrando arnoch chi ac ar yr ysgol. Ar gyfer gwaharddiadau parhaol a "
                "chyfnod penodol hirach gall gyfarwyddo adfer; ar gyfer gwaharddiadau "
                "cyfnod penodol byr dim ond ystyried sylwadau y mae. (DARLUNIADOL.)",
            ),
            "adviceLinks": ADVICE_LINKS_EDUCATION,
            "disclaimerRequired": False,
        },
        {
            "id": "appeal-panel",
            "category": "Tribunal",
            "title": text(
                "Independent exclusion appeal panel",
                "Panel apêl annibynnol ar waharddiadau",
            ),
            "summary": text(
                "An independent panel re-hears permanent exclusion cases after the "
                "governing body has upheld them.",
                "Mae panel annibynnol yn ail-wrando achosion gwaharddiad parhaol ar ôl "
                "i'r corff llywodraethu eu cadarnhau.",
            ),
            "detail": text(
                "The panel is independent of the school and the local authority. It can "
                "uphold the exclusion, or direct that the pupil be reinstated. Its "
                "decision binds the school. Only permanent exclusions reach the panel. "
                "(ILLUSTRATIVE.)",
                "Mae'r panel yn annibynnol ar yr ysgol a'r awdurdod lleol. Gall gadarnhau'r "
                "gwaharddiad, neu gyfarwyddo bod y disgybl yn cael ei adfer. Mae ei "
                "benderfyniad yn rhwymo'r ysgol. Dim ond gwaharddiadau parhaol sy'n "
                "cyrraedd y panel. (DARLUNIADOL.)",
            ),
            "adviceLinks": ADVICE_LINKS_EDUCATION,
            "disclaimerRequired": True,
        },
        {
            "id": "edu-tribunal",
            "category": "Tribunal",
            "title": text(
                "Education Tribunal for Wales",
                "Tribiwnlys Addysg Cymru",
            ),
            "summary": text(
                "The Tribunal hears claims that an exclusion discriminated against a "
                "child, for example because of disability.",
                "Mae'r Tribiwnlys yn gwrando hawliadau bod gwaharddiad wedi gwahaniaethu "
                "yn erbyn plentyn, er enghraifft oherwydd anabledd.",
            ),
            "detail": text(
                "A claim to the Education Tribunal is a legal claim with its own time "
                "limits and procedures. The Tribunal can declare that discrimination "
                "occurred and order remedies aimed at the child's education. Seek advice "
                "before starting a claim. (ILLUSTRATIVE.)",
                "Mae hawliad i'r Tribiwnlys Addysg yn hawliad cyfreithiol gyda'i derfynau "
                "amser a'i weithdrefnau ei hun. Gall y Tribiwnlys ddatgan bod gwahaniaethu "
                "wedi digwydd a gorchymyn rhwymedïau wedi'u hanelu at addysg y plentyn. "
                "Gofynnwch am gyngor cyn dechrau hawliad. (DARLUNIADOL.)",
            ),
            "adviceLinks": ADVICE_LINKS_EDUCATION,
            "disclaimerRequired": True,
        },
        {
            "id": "childrens-commissioner",
            "category": "Commissioner",
            "title": text(
                "Children's Commissioner for Wales",
                "Comisiynydd Plant Cymru",
            ),
            "summary": text(
                "The Commissioner's office offers free advice and support about "
                "children's rights, including exclusions.",
                "Mae swyddfa'r Comisiynydd yn cynnig cyngor a chymorth am ddim ynghylch "
                "hawliau plant, gan gynnwys gwaharddiadau.",
            ),
            "detail": text(
                "The Commissioner cannot overturn an exclusion, but the investigation and "
                "advice service can explain your child's rights, help you put your case, "
                "and raise systemic problems with schools and government. (ILLUSTRATIVE.)",
                "Ni all y Comisiynydd wrthdroi gwaharddiad, ond gall y gwasanaeth ymchwilio "
                "a chynghori esbonio hawliau eich plentyn, eich helpu i gyflwyno eich "
                "achos, a chodi problemau systemig gydag ysgolion a'r llywodraeth. "
                "(DARLUNIADOL.)",
            ),
            "adviceLinks": [
                {
                    "label": text(
                        "Children's Commissioner for Wales",
                        "Comisiynydd Plant Cymru",
                    ),
                    "url": "https://www.childcomwales.org.uk/",
                }
            ],
            "disclaimerRequired": False,
        },
        {
            "id": "ombudsman-education",
            "category": "Ombudsman",
            "title": text(
                "Public Services Ombudsman for Wales",
                "Ombwdsmon Gwasanaethau Cyhoeddus Cymru",
            ),
            "summary": text(
                "The Ombudsman investigates complaints of maladministration in how an "
                "exclusion was handled.",
                "Mae'r Ombwdsmon yn ymchwilio i gwynion am gamweinyddu yn y ffordd yr "
                "ymdriniwyd â gwaharddiad.",
            ),
            "detail": text(
                "The Ombudsman looks at whether you were treated unfairly or received a "
                "bad service — missed deadlines, ignored representations, procedural "
                "failures — and can recommend redress. The Ombudsman usually cannot "
                "investigate while a tribunal route is open to you. (ILLUSTRATIVE.)",
                "Mae'r Ombwdsmon yn ystyried a gawsoch eich trin yn annheg neu wasanaeth "
                "gwael — terfynau amser a fethwyd, sylwadau a anwybyddwyd, methiannau "
                "gweithdrefnol — a gall argymell unioni. Fel arfer ni all yr Ombwdsmon "
                "ymchwilio tra bo llwybr tribiwnlys ar agor i chi. (DARLUNIADOL.)",
            ),
            "adviceLinks": [
                {
                    "label": text(
                        "Public Services Ombudsman for Wales",
                        "Ombwdsmon Gwasanaethau Cyhoeddus Cymru",
                    ),
                    "url": "https://www.ombudsman.wales/",
                }
            ],
            "disclaimerRequired": False,
        },
        {
            "id": "outcome-reinstated",
            "category": "Outcome",
            "title": text(
                "Exclusion reconsidered or pupil reinstated",
                "Gwaharddiad wedi'i ailystyried neu'r disgybl wedi'i adfer",
            ),
            "summary": text(
                "The governing body resolved the matter: the exclusion was overturned, "
                "shortened or accepted.",
                "Datrysodd y corff llywodraethu y mater: cafodd y gwaharddiad ei "
                "wrthdroi, ei fyrhau neu ei dderbyn.",
            ),
            "detail": text(
                "Many exclusion disputes end with the governing body's review, whether "
                "because the pupil returns to school or because the family accepts the "
                "outcome after hearing the reasons. (ILLUSTRATIVE.)",
                "Daw llawer o anghydfodau gwahardd i ben gydag adolygiad y corff "
                "llywodraethu, naill ai am fod y disgybl yn dychwelyd i'r ysgol neu am "
                "fod y teulu'n derbyn y canlyniad ar ôl clywed y rhesymau. (DARLUNIADOL.)",
            ),
            "adviceLinks": [],
            "disclaimerRequired": False,
        },
        {
            "id": "outcome-panel-decision",
            "category": "Outcome",
            "title": text(
                "Appeal panel decision",
                "Penderfyniad y panel apêl",
            ),
            "summary": text(
                "The independent panel has decided the appeal and its decision binds the "
                "school.",
                "Mae'r panel annibynnol wedi penderfynu'r apêl ac mae ei benderfyniad yn "
                "rhwymo'r ysgol.",
            ),
            "detail": text(
                "The panel either upholds the permanent exclusion or directs "
                "reinstatement. Whichever way it goes, this is the end of the exclusion "
                "appeal route itself. (ILLUSTRATIVE.)",
                "Mae'r panel naill ai'n cadarnhau'r gwaharddiad parhaol neu'n cyfarwyddo "
                "adfer. Pa bynnag ffordd yr aiff, dyma ddiwedd llwybr apêl y gwaharddiad "
                "ei hun. (DARLUNIADOL.)",
            ),
            "adviceLinks": [],
            "disclaimerRequired": False,
        },
    ],
    "edges": [
        {
            "id": "gb-review-perm",
            "from": "excl-permanent",
            "to": "governing-body",
            "kind": "InternalReview",
            "label": text(
                "Ask the governing body to review the exclusion",
                "Gofyn i'r corff llywodraethu adolygu'r gwaharddiad",
            ),
            "explanation": text(
                "For a permanent exclusion the governing body must meet to review the "
                "head teacher's decision if you ask. It hears from you and can direct "
                "reinstatement. (ILLUSTRATIVE time limit.)",
                "Ar gyfer gwaharddiad parhaol rhaid i'r corff llywodraethu gyfarfod i "
                "adolygu penderfyniad y pennaeth os gofynnwch. Mae'n gwrando arnoch a "
                "gall gyfarwyddo adfer. (Terfyn amser DARLUNIADOL.)",
            ),
            "timeLimitDays": 15,
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
        {
            "id": "tribunal-claim",
            "from": "excl-permanent",
            "to": "edu-tribunal",
            "kind": "Appeal",
            "label": text(
                "Make a discrimination claim to the Education Tribunal for Wales",
                "Gwneud hawliad gwahaniaethu i Dribiwnlys Addysg Cymru",
            ),
            "explanation": text(
                "If you believe the exclusion discriminated against your child — for "
                "example because of disability — you can make a claim to the Education "
                "Tribunal for Wales. This is a legal claim with its own time limit. "
                "(ILLUSTRATIVE time limit.)",
                "Os credwch fod y gwaharddiad wedi gwahaniaethu yn erbyn eich plentyn — "
                "er enghraifft oherwydd anabledd — gallwch wneud hawliad i Dribiwnlys "
                "Addysg Cymru. Hawliad cyfreithiol yw hwn gyda'i derfyn amser ei hun. "
                "(Terfyn amser DARLUNIADOL.)",
            ),
            "timeLimitDays": 180,
            "preActionProtocol": False,
            "disclaimerRequired": True,
        },
        {
            "id": "commissioner-perm",
            "from": "excl-permanent",
            "to": "childrens-commissioner",
            "kind": "Signpost",
            "label": text(
                "Contact the Children's Commissioner for Wales",
                "Cysylltu â Chomisiynydd Plant Cymru",
            ),
            "explanation": text(
                "The Commissioner's advice service is free and independent, and can help "
                "you understand your child's rights before you commit to a route.",
                "Mae gwasanaeth cynghori'r Comisiynydd am ddim ac yn annibynnol, a gall "
                "eich helpu i ddeall hawliau eich plentyn cyn i chi ymrwymo i lwybr.",
            ),
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
        {
            "id": "gb-review-long",
            "from": "excl-fixed-long",
            "to": "governing-body",
            "kind": "InternalReview",
            "label": text(
                "Ask the governing body to review the exclusion",
                "Gofyn i'r corff llywodraethu adolygu'r gwaharddiad",
            ),
            "explanation": text(
                "For a fixed-term exclusion of more than five school days the governing "
                "body must meet to consider reinstatement if you ask. (ILLUSTRATIVE "
                "threshold and time limit.)",
                "Ar gyfer gwaharddiad cyfnod penodol o fwy na phum diwrnod ysgol rhaid "
                "i'r corff llywodraethu gyfarfod i ystyried adfer os gofynnwch. (Trothwy "
                "a therfyn amser DARLUNIADOL.)",
            ),
            "timeLimitDays": 15,
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
        {
            "id": "commissioner-long",
            "from": "excl-fixed-long",
            "to": "childrens-commissioner",
            "kind": "Signpost",
            "label": text(
                "Contact the Children's Commissioner for Wales",
                "Cysylltu â Chomisiynydd Plant Cymru",
            ),
            "explanation": text(
                "The Commissioner's advice service is free and independent, and can help "
                "you understand your child's rights before you commit to a route.",
                "Mae gwasanaeth cynghori'r Comisiynydd am ddim ac yn annibynnol, a gall "
                "eich helpu i ddeall hawliau eich plentyn cyn i chi ymrwymo i lwybr.",
            ),
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
        {
            "id": "gb-review-short",
            "from": "excl-fixed-short",
            "to": "governing-body",
            "kind": "InternalReview",
            "label": text(
                "Make representations to the governing body",
                "Cyflwyno sylwadau i'r corff llywodraethu",
            ),
            "explanation": text(
                "For a short fixed-term exclusion the governing body must consider your "
                "representations, although it cannot direct reinstatement. Your views go "
                "on the record. (ILLUSTRATIVE threshold.)",
                "Ar gyfer gwaharddiad cyfnod penodol byr rhaid i'r corff llywodraethu "
                "ystyried eich sylwadau, er na all gyfarwyddo adfer. Caiff eich barn ei "
                "chofnodi. (Trothwy DARLUNIADOL.)",
            ),
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
        {
            "id": "commissioner-short",
            "from": "excl-fixed-short",
            "to": "childrens-commissioner",
            "kind": "Signpost",
            "label": text(
                "Contact the Children's Commissioner for Wales",
                "Cysylltu â Chomisiynydd Plant Cymru",
            ),
            "explanation": text(
                "The Commissioner's advice service is free and independent, and can help "
                "you understand your child's rights before you commit to a route.",
                "Mae gwasanaeth cynghori'r Comisiynydd am ddim ac yn annibynnol, a gall "
                "eich helpu i ddeall hawliau eich plentyn cyn i chi ymrwymo i lwybr.",
            ),
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
        {
            "id": "panel-appeal",
            "from": "governing-body",
            "to": "appeal-panel",
            "kind": "Appeal",
            "label": text(
                "Appeal to the independent appeal panel",
                "Apelio i'r panel apêl annibynnol",
            ),
            "explanation": text(
                "If the governing body upholds a permanent exclusion you can appeal to an "
                "independent appeal panel, whose decision binds the school. Fixed-term "
                "exclusions cannot be taken to the panel. (ILLUSTRATIVE time limit.)",
                "Os yw'r corff llywodraethu yn cadarnhau gwaharddiad parhaol gallwch "
                "apelio i banel apêl annibynnol, y mae ei benderfyniad yn rhwymo'r ysgol. "
                "Ni ellir mynd â gwaharddiadau cyfnod penodol i'r panel. (Terfyn amser "
                "DARLUNIADOL.)",
            ),
            "timeLimitDays": 15,
            "preActionProtocol": False,
            "disclaimerRequired": True,
        },
        {
            "id": "ombudsman-exclusion",
            "from": "governing-body",
            "to": "ombudsman-education",
            "kind": "Complaint",
            "label": text(
                "Complain to the Public Services Ombudsman for Wales",
                "Cwyno i Ombwdsmon Gwasanaethau Cyhoeddus Cymru",
            ),
            "explanation": OMBUDSMAN_EXPLANATION,
            "timeLimitDays": 365,
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
        {
            "id": "accept-gb-decision",
            "from": "governing-body",
            "to": "outcome-reinstated",
            "kind": "Signpost",
            "label": text(
                "Accept the governing body's decision",
                "Derbyn penderfyniad y corff llywodraethu",
            ),
            "explanation": text(
                "If the governing body reinstates your child, or explains the exclusion "
                "in a way you accept, the dispute ends here.",
                "Os yw'r corff llywodraethu yn adfer eich plentyn, neu'n esbonio'r "
                "gwaharddiad mewn ffordd rydych yn ei derbyn, daw'r anghydfod i ben yma.",
            ),
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
        {
            "id": "await-panel-decision",
            "from": "appeal-panel",
            "to": "outcome-panel-decision",
            "kind": "Signpost",
            "label": text(
                "Continue to the panel's decision",
                "Parhau at benderfyniad y panel",
            ),
            "explanation": text(
                "The panel hears the appeal afresh and either upholds the exclusion or "
                "directs reinstatement; its decision binds the school.",
                "Mae'r panel yn gwrando'r apêl o'r newydd ac naill ai'n cadarnhau'r "
                "gwaharddiad neu'n cyfarwyddo adfer; mae ei benderfyniad yn rhwymo'r "
                "ysgol.",
            ),
            "preActionProtocol": False,
            "disclaimerRequired": False,
        },
    ],
    "entryPoints": [
        {
            "id": "permanent-exclusion-entry",
            "node": "excl-permanent",
            "description": text(
                "Your child has been permanently excluded from school.",
                "Mae eich plentyn wedi'i wahardd yn barhaol o'r ysgol.",
            ),
            "keywords": {
                "en": [
                    "permanent exclusion",
                    "permanently excluded",
                    "expelled",
                    "expelled from school",
                ],
                "cy": [
                    "gwaharddiad parhaol",
                    "wedi ei wahardd yn barhaol",
                    "wedi ei ddiarddel",
                ],
            },
        },
        {
            "id": "fixed-term-long-entry",
            "node": "excl-fixed-long",
            "description": text(
                "Your child has been excluded for a fixed period of more than five school "
                "days. (ILLUSTRATIVE threshold.)",
                "Mae eich plentyn wedi'i wahardd am gyfnod penodol o fwy na phum diwrnod "
                "ysgol. (Trothwy DARLUNIADOL.)",
            ),
            "keywords": {
                "en": [
                    "fixed-term exclusion",
                    "suspended for weeks",
                    "long suspension",
                    "excluded for more than five days",
                ],
                "cy": [
                    "gwaharddiad cyfnod penodol",
                    "wedi ei wahardd dros dro",
                    "gwaharddiad hir",
                ],
            },
        },
        {
            "id": "fixed-term-short-entry",
            "node": "excl-fixed-short",
            "description": text(
                "Your child has been excluded for five school days or fewer. "
                "(ILLUSTRATIVE threshold.)",
                "Mae eich plentyn wedi'i wahardd am bum diwrnod ysgol neu lai. "
                "(Trothwy DARLUNIADOL.)",
            ),
            "keywords": {
                "en": [
                    "short exclusion",
                    "suspended for a few days",
                    "suspended from school",
                    "excluded for a day",
                ],
                "cy": [
                    "gwaharddiad byr",
                    "wedi ei wahardd am ddiwrnod",
                    "gwaharddiad ychydig ddyddiau",
                ],
            },
        },
    ],
    "exclusionGroups": [
        {
            "id": "tribunal-vs-ombudsman",
            "members": ["tribunal-claim", "ombudsman-exclusion"],
            "explanation": text(
                "Tribunal and Ombudsman routes are alternatives: if you have a right to "
                "take the matter to a tribunal, usually the Ombudsman will not be able to "
                "look into the same matter at the same time.",
                "Mae llwybrau'r tribiwnlys a'r Ombwdsmon yn ddewisiadau amgen: os oes "
                "gennych hawl i fynd â'r mater i dribiwnlys, fel arfer ni fydd yr "
                "Ombwdsmon yn gallu ymchwilio i'r un mater ar yr un pryd.",
            ),
        },
        {
            "id": "panel-vs-ombudsman",
            "members": ["panel-appeal", "ombudsman-exclusion"],
            "explanation": text(
                "Panel and Ombudsman routes are alternatives: if the independent appeal "
                "panel is seized of the exclusion, usually the Ombudsman will not be able "
                "to look into the same matter at the same time.",
                "Mae llwybrau'r panel a'r Ombwdsmon yn ddewisiadau amgen: os yw'r panel "
                "apêl annibynnol yn ymdrin â'r gwaharddiad, fel arfer ni fydd yr "
                "Ombwdsmon yn gallu ymchwilio i'r un mater ar yr un pryd.",
            ),
        },
    ],
    "prerequisiteRules": [
        {
            "edge": "panel-appeal",
            "requires": ["gb-review-perm"],
            "explanation": text(
                "Only a permanent exclusion that the governing body has reviewed can go "
                "to the independent appeal panel. Fixed-term exclusions have no panel "
                "route. (ILLUSTRATIVE.)",
                "Dim ond gwaharddiad parhaol y mae'r corff llywodraethu wedi'i adolygu "
                "sy'n gallu mynd i'r panel apêl annibynnol. Nid oes llwybr panel ar gyfer "
                "gwaharddiadau cyfnod penodol. (DARLUNIADOL.)",
            ),
        },
    ],
}


def freeze(doc: dict, name: str) -> None:
    raw = canonical_json_bytes(doc)
    graph = parse_graph(raw)
    diagnostics = validate(graph)
    errors = [d for d in diagnostics if d.severity is Severity.ERROR]
    warnings = [d for d in diagnostics if d.severity is Severity.WARNING]
    if errors:
        for d in errors:
            print(f"  {d.code} {d.subject}: {d.message}")
        raise SystemExit(f"{name}: refusing to freeze a graph with Errors")
    for d in warnings:
        print(f"  note {name}: {d.code} {d.subject}: {d.message}")
    frozen = serialize_graph(graph)
    if parse_graph(frozen) != graph:
        raise SystemExit(f"{name}: round-trip mismatch")
    out = OUT_DIR / f"{name}.json"
    out.write_bytes(frozen)
    import hashlib

    print(f"{name}: {len(graph.nodes)} nodes, {len(graph.edges)} edges -> {out.name}")
    print(f"{name} sha256: {hashlib.sha256(frozen).hexdigest()}")


if __name__ == "__main__":
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    freeze(HOUSING, "housing")
    freeze(EDUCATION, "education")
