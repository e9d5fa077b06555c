// Copyright 2026 The Reprolint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reprolint/lexicon.h"

namespace reprolint {

// Entries are "word/TAGS[/lemma]". Tags: V verb, N noun, P pronoun,
// A adposition, R adverb, D determiner, J adjective, M numeral, O other.
// Only base forms and irregular inflections are listed; regular inflections
// are recovered by suffix stripping in Lexicon::Analyze.
namespace {

constexpr std::string_view kTable = R"LEX(
a/D an/D the/D this/D that/DP these/D those/D my/D your/D his/D her/DP its/D
our/D their/D some/D any/D each/D every/D all/D no/D another/D either/D
neither/D both/D such/D what/DP which/DP whose/D whatever/D

i/P you/P he/P she/P it/P we/P they/P me/P him/P them/P us/P myself/P
yourself/P itself/P themselves/P something/P anything/P everything/P
nothing/P someone/P anyone/P everyone/P somebody/P anybody/P mine/P yours/P
who/P whom/P

on/A in/A into/A onto/A to/A for/A of/A with/A from/A at/A by/A about/A
after/A before/A under/A over/A through/A via/A without/A within/A
between/A up/A down/A off/A out/A across/A along/A around/A behind/A
beside/A near/A inside/A outside/A upon/A toward/A towards/A like/AV
since/A until/A till/A during/A per/A than/A except/A below/A above/A
against/A among/A beneath/A beyond/A

and/O or/O but/O nor/O so/O because/O when/O if/O while/O whenever/O
although/O though/O unless/O whether/O as/O once/OR whereas/O

then/R now/R again/R also/R just/R only/RJ really/R still/R already/R
very/R too/R quickly/R slowly/R finally/R afterwards/R afterward/R later/R
please/R immediately/R suddenly/R always/R never/R sometimes/R often/R
not/R n't/R here/R there/R even/R instead/R away/R twice/R firstly/R
secondly/R lastly/R simply/R actually/R randomly/R accidentally/R
successfully/R correctly/R properly/R manually/R automatically/R yes/R
however/R anyway/R otherwise/R meanwhile/R soon/R almost/R maybe/R
perhaps/R probably/R together/R apart/R forth/R else/R ever/R rather/R
quite/R somehow/R anymore/R repeatedly/R briefly/R directly/R normally/R
usually/R currently/R previously/R initially/R eventually/R completely/R
fully/R partially/R incorrectly/R properly/R again/R right/NJR

one/M two/M three/M four/M five/M six/M seven/M eight/M nine/M ten/M
eleven/M twelve/M twenty/M zero/M hundred/M thousand/M million/M
first/JRM second/MJN third/MJ fourth/MJ fifth/MJ half/NM

be/V is/V/be am/V/be are/V/be was/V/be were/V/be been/V/be being/V/be
have/V has/V/have had/V/have having/V/have do/V does/V/do did/V/do
done/VJ/do doing/V/do can/V could/V will/V would/V should/V must/V may/V
might/V shall/V 's/V/be 're/V/be 've/V/have 'll/V/will 'm/V/be
get/V got/V/get gotten/V/get getting/V/get

went/V/go gone/VJ/go took/V/take taken/V/take made/V/make saw/V/see
seen/V/see gave/V/give given/V/give chose/V/choose chosen/VJ/choose
wrote/V/write written/VJ/write ran/V/run began/V/begin begun/V/begin
came/V/come found/V/find held/V/hold kept/V/keep lost/VJ/lose sent/V/send
spoke/V/speak spoken/V/speak broke/VJ/break broken/VJ/break froze/V/freeze
frozen/VJ/freeze shown/V/show hid/V/hide hidden/JV/hide told/V/tell
thought/V/think brought/V/bring bought/V/buy paid/V/pay
understood/V/understand became/V/become knew/V/know known/VJ/know
drew/V/draw drawn/V/draw threw/V/throw thrown/V/throw stuck/V/stick
spun/V/spin felt/V/feel meant/V/mean led/V/lead fell/V/fall fallen/V/fall
rode/V/ride rose/V/rise woke/V/wake sat/V/sit stood/V/stand struck/V/strike
swept/V/sweep wore/V/wear worn/V/wear tore/V/tear torn/V/tear forgot/V/forget
forgotten/V/forget drove/V/drive driven/V/drive ate/V/eat eaten/V/eat
children/N/child people/N/person men/N/man women/N/woman feet/N/foot
data/N media/N/medium indices/N/index

tap/VN click/VN press/VN hit/VN push/VN touch/VN select/V choose/V pick/VN
mark/VN check/VN uncheck/V toggle/VN tick/VN untick/V open/VJ launch/VN
start/VN run/VN restart/V reopen/V close/VJ exit/VN quit/V leave/V go/V
navigate/V return/VN visit/VN access/VN load/VN reload/V refresh/VN
swipe/VN scroll/VN slide/VN fling/V drag/VN drop/VN rotate/V turn/VN
flip/VN tilt/VN switch/VN type/VN enter/V input/VN insert/VN edit/VN set/VN
write/V fill/V put/V change/VN specify/V provide/V long-tap/V long-press/V
long-click/V hold/VN save/VN delete/V remove/V add/V create/V make/V
cancel/V confirm/V dismiss/V accept/V apply/V reject/V submit/V send/V
share/VN export/VN import/VN copy/VN paste/V cut/VN undo/VN redo/V
search/VN find/V filter/NV sort/VN view/NV display/NV show/VN hide/V see/V
notice/VN observe/V receive/V appear/V disappear/V crash/NV freeze/VN
hang/V fail/V happen/V occur/V keep/V want/V need/VN try/VN attempt/VN
expect/V use/VN download/VN upload/VN install/V uninstall/V update/VN
upgrade/VN sync/VN synchronize/V restore/V reset/VN clear/VJ empty/JV
enable/V disable/V activate/V deactivate/V allow/V block/VN connect/V
disconnect/V log/VN login/NV logout/NV sign/VN register/VN play/VN
pause/VN stop/VN record/VN capture/VN take/V zoom/VN rename/V move/VN
lock/VN unlock/V mute/V unmute/V archive/VN favorite/NJV star/NV rate/NV
tag/NV attach/V browse/V print/VN preview/NV duplicate/VJN merge/V split/VN
expand/V collapse/V minimize/V maximize/V resize/V shake/VN wait/VN lose/V
fix/VN break/VN work/VN look/VN become/V seem/V stay/V come/V give/V
bring/V proceed/V continue/V repeat/VN retry/V recreate/V verify/V scan/VN
calculate/V compute/V count/NV convert/V schedule/NV plan/NV book/NV buy/V
purchase/NV pay/V order/NV call/VN message/NV text/NV email/NV mail/NV
reply/VN forward/VRJ note/NV list/NV begin/V finish/V complete/VJ end/NV
close/VJ think/V know/V tell/V say/V ask/V help/NV read/V listen/V watch/VN
hear/V feel/V mean/V let/V like/AV love/V hate/V prefer/V assign/V
select/V deselect/V highlight/VN focus/NV unfocus/V choose/V link/NV
unlink/V follow/V unfollow/V subscribe/V unsubscribe/V join/V invite/V
reload/V refill/V replace/V modify/V adjust/V drag/VN tilt/VN hover/V
highlight/VN shrink/V grow/V fit/V place/NV position/NV arrange/V
group/NV ungroup/V clone/VN publish/V post/NV comment/NV vote/NV
bookmark/NV download/VN stream/NV sell/V trade/NV transfer/NV deposit/NV
withdraw/V charge/NV refund/NV track/NV navigate/V tilt/VN zoom/VN
dial/VN answer/NV reject/V block/VN ring/NV vibrate/V silence/NV
snooze/VN dismiss/V alarm/NV remind/V reminder/N cross/VN erase/V
wipe/V clean/VJ collect/V gather/V compare/V check/VN uncheck/V

app/N application/N program/NV phone/N device/N screen/N page/N window/N
dialog/N dialogue/N popup/NJ pop-up/NJ menu/N item/N option/N setting/N
preference/N button/N field/N box/N textbox/N checkbox/N dropdown/NJ
spinner/N radio/N switch/VN slider/N toggle/VN tab/N toolbar/N bar/N
header/N footer/N section/N row/N column/N table/N cell/N card/N url/N
address/N password/N username/N user/N profile/N contact/N calendar/N
event/N task/N file/N folder/N document/N backup/NV storage/N memory/N
database/N color/N colour/N theme/N font/N size/N language/N currency/N
format/NV style/N mode/N orientation/N landscape/N portrait/N top/NJ
bottom/NJ left/NJ up/A down/A back/NRJ home/N result/N beginning/N
version/N about/A info/N information/N detail/N summary/N overview/N
history/N chart/N graph/N statistics/N statistic/N stats/N map/NV
location/N position/NV distance/N speed/N unit/N vehicle/N car/N fuel/N
gas/N fill-up/N mileage/N odometer/N trip/N route/N song/N music/N video/N
audio/N playlist/N album/N artist/N sound/N volume/N player/N game/N
level/N score/N timer/N clock/N widget/N server/N network/N connection/N
wifi/N internet/N bluetooth/N gps/N sd/N recipe/N ingredient/N product/N
store/NV shop/NV cart/N payment/N wallet/N bank/N balance/N label/NV
autocomplete/NJ suggestion/N line/N word/N character/N letter/N digit/N
symbol/N space/N lunch/N dinner/N breakfast/N coffee/N food/N transport/N
dot/N icon/N image/N picture/N photo/N camera/N gallery/N title/N name/NV
description/N price/N amount/N cost/NV total/NJ value/N number/N date/N
time/NV day/N week/N month/N year/N hour/N minute/N category/N account/N
transaction/N expense/N income/N budget/N report/NV bug/N error/N
notification/N alert/N toast/N keyboard/N key/N sheet/N list/NV entry/N
record/VN element/N component/N control/NV panel/N area/N region/N
content/N message/NV text/NV view/NV display/NV screen/N scene/N frame/N
background/N foreground/N border/N margin/N dashboard/N feed/N timeline/N
post/NV tweet/NV thread/N conversation/N chat/NV inbox/N outbox/N
attachment/N download/VN upload/VN link/NV tag/NV note/NV comment/NV
question/N answer/NV feedback/N rating/N review/NV star/NV filter/NV
search/VN query/N keyword/N match/NV issue/N problem/N step/N action/N
way/N thing/N part/N kind/N type/VN sort/VN order/NV sequence/N rule/N
task/N goal/N project/N team/N member/N group/NV organization/N company/N
person/N friend/N family/N customer/N client/N owner/N admin/N
administrator/N developer/N guest/N player/N author/N recipient/N
sender/N price/N currency/N dollar/N euro/N cent/N tax/N tip/N fee/N
discount/N coupon/N receipt/N invoice/N bill/N stock/N share/VN
portfolio/N loan/N credit/N debit/N cash/N check/VN cheque/N card/N
pin/NV code/N phone/N sms/N call/VN voicemail/N ringtone/N wallpaper/N
alarm/NV stopwatch/N countdown/N lap/N workout/N exercise/N habit/N
goal/N progress/N weight/N height/N temperature/N weather/N forecast/N
city/N country/N region/N zone/N street/N home/N work/VN office/N
school/N class/N course/N lesson/N exam/N grade/N student/N teacher/N
book/NV chapter/N library/N collection/N archive/VN trash/NV bin/N
recycle/V cache/NV log/VN debug/NV mode/N state/N status/N option/N
preview/NV thumbnail/N zoom/VN crop/NV filter/NV effect/N brush/N pen/N
pencil/N eraser/N canvas/N layer/N shape/N square/N circle/N line/N
point/N marker/N pin/NV overlay/N compass/N sensor/N battery/N charger/N
brightness/N contrast/N sd/N sdcard/N card/N drive/NV cloud/N
dropbox/N google/N account/N sync/VN copy/VN clipboard/N selection/N
range/N period/N interval/N schedule/NV deadline/N due/J priority/N
reminder/N repeat/VN recurrence/N fuel/N fillup/N station/N odometer/N
meter/N kilometer/N mile/N gallon/N liter/N litre/N
plus/N minus/N equal/J sign/VN formula/N result/N calculation/N

new/J old/J blank/J long/J short/J wrong/J correct/JV same/J different/J
last/JR main/J current/J previous/J next/RJ other/J whole/J full/J
partial/J big/J small/J large/J little/J high/J low/J good/J bad/J
default/JN custom/JN visible/J invisible/J enabled/J disabled/J available/J
unavailable/J selected/J checked/J unchecked/J active/J inactive/J dark/J
light/JN bright/J automatic/J manual/JN multiple/J single/J several/J
various/J many/J few/J additional/J extra/J latest/J recent/J daily/J
weekly/J monthly/J yearly/J final/J initial/J specific/J particular/J
certain/J valid/J invalid/J closed/J blue/JN red/JN green/JN yellow/JN
black/JN white/JN gray/JN grey/JN purple/JN pink/JN brown/JN orange/JN
more/JR most/JR less/JR least/JR much/JR fine/J okay/J ok/JN able/J
unable/J possible/J impossible/J empty/JV numeric/J alphabetical/J
chronological/J ascending/J descending/J random/J several/J entire/J
previous/J upper/J lower/J middle/JN center/NJ centre/NJ horizontal/J
vertical/J quick/J slow/J fast/J easy/J hard/J simple/J basic/J advanced/J
general/J global/J local/J public/J private/J personal/J secure/J
online/J offline/J slow/J broken/VJ/break missing/J wrong/J unexpected/J
expected/J strange/J weird/J odd/J incorrect/J proper/J real/J actual/J
sorted/J unsorted/J duplicate/VJN original/J primary/J secondary/J
)LEX";

}  // namespace

std::string_view DefaultLexiconTable() { return kTable; }

}  // namespace reprolint
