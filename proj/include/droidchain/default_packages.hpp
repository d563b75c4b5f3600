/*
 * Copyright (C) 2026 The droidchain Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string_view>

namespace droidchain {

// Bundled API package whitelist: Android platform packages (API level 26)
// plus common Google Play Services and Firebase packages. Same format as the
// external package-list file (one prefix per line, '#' comments), and kept
// byte-identical to data/packages.txt in the repository root.
inline constexpr std::string_view kDefaultPackageList = R"(# Android platform packages (API level 26)
android
android.accessibilityservice
android.accounts
android.animation
android.annotation
android.app
android.app.admin
android.app.assist
android.app.backup
android.app.job
android.app.usage
android.appwidget
android.bluetooth
android.bluetooth.le
android.companion
android.content
android.content.pm
android.content.res
android.database
android.database.sqlite
android.databinding
android.drm
android.gesture
android.graphics
android.graphics.drawable
android.graphics.drawable.shapes
android.graphics.fonts
android.graphics.pdf
android.hardware
android.hardware.camera2
android.hardware.camera2.params
android.hardware.display
android.hardware.fingerprint
android.hardware.input
android.hardware.usb
android.icu.lang
android.icu.math
android.icu.text
android.icu.util
android.inputmethodservice
android.location
android.media
android.media.audiofx
android.media.browse
android.media.effect
android.media.midi
android.media.projection
android.media.session
android.media.tv
android.mtp
android.net
android.net.http
android.net.nsd
android.net.rtp
android.net.sip
android.net.wifi
android.net.wifi.aware
android.net.wifi.hotspot2
android.net.wifi.p2p
android.net.wifi.p2p.nsd
android.nfc
android.nfc.cardemulation
android.nfc.tech
android.opengl
android.os
android.os.health
android.os.storage
android.preference
android.print
android.print.pdf
android.printservice
android.provider
android.renderscript
android.sax
android.security
android.security.keystore
android.service.autofill
android.service.carrier
android.service.chooser
android.service.dreams
android.service.media
android.service.notification
android.service.quicksettings
android.service.restrictions
android.service.textservice
android.service.voice
android.service.vr
android.service.wallpaper
android.speech
android.speech.tts
android.system
android.telecom
android.telephony
android.telephony.cdma
android.telephony.euicc
android.telephony.gsm
android.telephony.mbms
android.test
android.test.mock
android.test.suitebuilder
android.test.suitebuilder.annotation
android.text
android.text.format
android.text.method
android.text.style
android.text.util
android.transition
android.util
android.view
android.view.accessibility
android.view.animation
android.view.autofill
android.view.inputmethod
android.view.textclassifier
android.view.textservice
android.webkit
android.widget
dalvik.annotation
dalvik.bytecode
dalvik.system
# Java and javax packages available on Android
java.awt.font
java.beans
java.io
java.lang
java.lang.annotation
java.lang.invoke
java.lang.ref
java.lang.reflect
java.math
java.net
java.nio
java.nio.channels
java.nio.channels.spi
java.nio.charset
java.nio.charset.spi
java.nio.file
java.nio.file.attribute
java.nio.file.spi
java.security
java.security.acl
java.security.cert
java.security.interfaces
java.security.spec
java.sql
java.text
java.time
java.time.chrono
java.time.format
java.time.temporal
java.time.zone
java.util
java.util.concurrent
java.util.concurrent.atomic
java.util.concurrent.locks
java.util.function
java.util.jar
java.util.logging
java.util.prefs
java.util.regex
java.util.stream
java.util.zip
javax.crypto
javax.crypto.interfaces
javax.crypto.spec
javax.microedition.khronos.egl
javax.microedition.khronos.opengles
javax.net
javax.net.ssl
javax.security.auth
javax.security.auth.callback
javax.security.auth.login
javax.security.auth.x500
javax.security.cert
javax.sql
javax.xml
javax.xml.datatype
javax.xml.namespace
javax.xml.parsers
javax.xml.transform
javax.xml.transform.dom
javax.xml.transform.sax
javax.xml.transform.stream
javax.xml.validation
javax.xml.xpath
# Other platform packages
junit.framework
junit.runner
org.apache.http.conn
org.apache.http.conn.scheme
org.apache.http.conn.ssl
org.apache.http.params
org.json
org.w3c.dom
org.w3c.dom.ls
org.xml.sax
org.xml.sax.ext
org.xml.sax.helpers
org.xmlpull.v1
org.xmlpull.v1.sax2
# Google Play Services
com.google.android.gms.actions
com.google.android.gms.ads
com.google.android.gms.ads.identifier
com.google.android.gms.analytics
com.google.android.gms.appindexing
com.google.android.gms.auth
com.google.android.gms.auth.api
com.google.android.gms.awareness
com.google.android.gms.cast
com.google.android.gms.cast.framework
com.google.android.gms.common
com.google.android.gms.common.api
com.google.android.gms.drive
com.google.android.gms.fitness
com.google.android.gms.games
com.google.android.gms.gcm
com.google.android.gms.identity
com.google.android.gms.iid
com.google.android.gms.instantapps
com.google.android.gms.location
com.google.android.gms.location.places
com.google.android.gms.maps
com.google.android.gms.maps.model
com.google.android.gms.nearby
com.google.android.gms.plus
com.google.android.gms.safetynet
com.google.android.gms.search
com.google.android.gms.security
com.google.android.gms.tagmanager
com.google.android.gms.tasks
com.google.android.gms.vision
com.google.android.gms.vision.barcode
com.google.android.gms.vision.face
com.google.android.gms.vision.text
com.google.android.gms.wallet
com.google.android.gms.wearable
# Firebase
com.google.firebase
com.google.firebase.analytics
com.google.firebase.appindexing
com.google.firebase.auth
com.google.firebase.crash
com.google.firebase.database
com.google.firebase.dynamiclinks
com.google.firebase.iid
com.google.firebase.invites
com.google.firebase.messaging
com.google.firebase.perf
com.google.firebase.remoteconfig
com.google.firebase.storage
)";

}  // namespace droidchain
